#pragma once

#include "bord/chart/types.hpp"
#include "bord/charnum/integral.hpp"
#include "bord/steenrod/steenrod.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bord::charnum {

using ring::Polynomial;
using steenrod::CheckReport;
using steenrod::SteenrodSpec;

/// Cohomology of a closed manifold: the F2 ring with its squares (presented through the
/// dimension), an optional integral ring, the top monomial and w1, w2, w3.
struct ManifoldModel {
    std::string name;
    int dimension = 0;
    SteenrodSpec f2;
    std::optional<IntegralRing> integral;
    Monomial fundamental;
    Polynomial w1, w2, w3;

    Polynomial v2() const;
};

/// Data the lift through the double cover is built from: Chern roots of the bundles involved.
struct Lift {
    std::string kind; // "orthogonal_pair" or "unitary"
    std::vector<std::vector<IntegralPolynomial>> bundles;
};

/// Classifying map into one of the quotient groups, by its effect on the named generators.
struct BHMap {
    std::string target;  // catalogue ring of the quotient
    std::string through; // optional intermediate quotient the map factors through
    std::map<std::string, Polynomial> f2;                 // x2, x3, y4, y6
    std::map<std::string, IntegralPolynomial> integral; // z4, z6
    std::optional<Lift> lift;

    /// Zero when the image was not declared.
    Polynomial f2_image(const ManifoldModel& m, const std::string& g) const;
    bool declares(const std::string& g) const { return f2.count(g) != 0; }
};

struct Manifold {
    ManifoldModel model;
    std::optional<BHMap> map;
};

/// Catalogued models: point, HP1, CP2, CP1xCP1, Wu, HP1xS1, HP1xS1xS1, CP2xCP1, CP1cubed.
Manifold preset_manifold(std::string_view name);
std::vector<std::string> manifold_names();
Manifold manifold_from_json(const std::string& name, const nlohmann::json& j);

enum class Layer { F2, Integral };

/// Pairing with the fundamental class. InputError off the top degree.
long long integrate(const ManifoldModel& m, const Polynomial& cls);
long long integrate(const ManifoldModel& m, const IntegralPolynomial& cls);
/// Parses cls in the requested layer first.
long long integrate(const ManifoldModel& m, std::string_view cls, Layer layer);

/// f*x2 = w2(M).
bool spin_g_check(const ManifoldModel& m, const BHMap& f);

/// Signature of the middle-degree intersection form. InputError unless the dimension is 4k and
/// the integral ring is present.
long long signature(const ManifoldModel& m);

/// (signature, integral of f*z4) on a 4-manifold.
std::pair<long long, long long> deg4_invariants(const ManifoldModel& m, const BHMap& f);
/// (half the integral of f*z6, integral of f*(x2 y4) mod 2) on a 6-manifold.
std::pair<long long, long long> deg6_invariants(const ManifoldModel& m, const BHMap& f);
/// The four pairings f*y6, Sq2(f*y4), v2 f*y4 and f*(x2 y4) agree on a 6-manifold.
bool wu_parity_check(const ManifoldModel& m, const BHMap& f);

/// f* commutes with Sq^i on every target generator whose image and square images are declared,
/// and kills the target's relations.
CheckReport naturality_check(const ManifoldModel& m, const BHMap& f);
/// Mod-2 reductions of z4 and z6 against the declared F2 images.
CheckReport reduction_check(const ManifoldModel& m, const BHMap& f);
/// Rebuilds the declared images from the lift data.
CheckReport lift_check(const ManifoldModel& m, const BHMap& f);

struct Certificate {
    std::string name;
    long long value = 0;
    long long expected = 0;
    std::string note;
    std::pair<int, int> bidegree; // (stem, s) of the chart class it is about
    bool ok() const { return value == expected; }
};

/// Wu pairing, and the S1 multiples of HP1 tied to the h1 edges of the Sp4 chart.
std::vector<Certificate> deg5_certificates(const chart::AdamsChart& sp4);
std::vector<Certificate> deg5_certificates();

} // namespace bord::charnum
