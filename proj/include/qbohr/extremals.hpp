#pragma once

#include "qbohr/bohr.hpp"
#include "qbohr/series.hpp"

#include <string>
#include <vector>

namespace qbohr {

/// The four extremal families that realize equality at the sharp radii and
/// violation just beyond them.
enum class Family {
    StarlikeKoebe,  ///< q(1-qu)^{-*2}: p_k = k u^{k-1}
    GeomCayley,     ///< q(1-qu)^{-*}:  p_k = u^{k-1}
    MobiusLike,     ///< p_0 = a, p_k = -(1-a^2) a^{k-1} u
    HalfSpaceMap,   ///< p_0 = a, p_k = -2(1-a) u
};

std::string family_name(Family family);
Family family_from_name(const std::string& name);

struct ExtremalSpec {
    Family family = Family::MobiusLike;
    double a = 0.5;                         ///< parameter where applicable
    Quaternion u = Quaternion::unit_i();    ///< boundary quaternion, |u| = 1
    int order = 64;                         ///< truncation degree
};

/// Truncated coefficient sequence from the closed forms (the primary path).
/// Throws std::invalid_argument on invalid specs (|u| != 1, a out of range).
QSeries build(const ExtremalSpec& spec);

/// Same family rebuilt through the star algebra (regular reciprocal and
/// *-products); cross-checks the series module against the closed forms.
QSeries build_via_star(const ExtremalSpec& spec);

/// The coefficient class each family certifies.
CoefficientClass paired_class(Family family);

/// Exact truncation-free value of the functional on the family at |q| = r.
/// Defined pairings: MajorantSum on StarlikeKoebe / GeomCayley / MobiusLike,
/// PoweredSum / RefinedSum / ImprovedSum on MobiusLike, HalfSpaceSum on
/// HalfSpaceMap. Throws std::invalid_argument for undefined pairings.
double closed_form_value(Family family, FunctionalId id, double r, double a,
                         const BohrParams& params);

/// Per-theorem wiring: which class, functional, extremal family, and
/// sharpness ladder certify each statement.
struct TheoremInfo {
    std::string id;
    CoefficientClass cls;
    FunctionalId functional = FunctionalId::MajorantSum;
    Family family = Family::MobiusLike;
    bool has_parameter = false;   ///< family carries the a-parameter
    std::vector<double> ladder;   ///< a-values probed for sharpness
};

/// Known ids: "1.1", "1.2", "1.3", "B", "1.4", "1.5", "1.6", "1.7".
/// Throws std::invalid_argument otherwise.
TheoremInfo theorem_info(const std::string& id);

/// The sharp radius of the statement (m enters only for "1.4"/"1.5"/"1.6").
double theorem_radius(const std::string& id, double m = 1.0);

struct Witness {
    ExtremalSpec spec;
    double r = 0.0;
    double value = 0.0;
};

/// Finds a family member whose closed-form functional value exceeds 1 at
/// radius r (> the theorem radius; throws std::invalid_argument otherwise).
/// Probes the theorem's a-ladder and throws std::runtime_error if every
/// candidate stays at or below 1.
Witness sharpness_witness(const std::string& theorem_id, double r,
                          const BohrParams& params = {});

} // namespace qbohr
