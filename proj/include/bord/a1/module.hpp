#pragma once

#include "bord/a1/algebra.hpp"
#include "bord/steenrod/steenrod.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bord::a1 {

using steenrod::CheckReport;

/// Finite graded F2-module with Sq1 and Sq2 acting. Degrees lo..hi carry data; everything
/// outside is zero. A module with a ceiling stands for the quotient of a larger module by
/// everything above the ceiling.
class A1Module {
public:
    A1Module() = default;
    A1Module(int lo, std::vector<std::size_t> dims, std::optional<int> ceiling = std::nullopt);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int d) const;
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    std::optional<int> ceiling() const { return ceiling_; }
    bool truncated() const { return ceiling_.has_value(); }
    void set_ceiling(std::optional<int> c) { ceiling_ = c; }

    /// Matrix of Sq^op (op = 1 or 2) from degree d to d+op; rows dim(d+op), cols dim(d).
    f2::Matrix sq(int op, int d) const;
    f2::Matrix sq1(int d) const { return sq(1, d); }
    f2::Matrix sq2(int d) const { return sq(2, d); }
    void set_sq(int op, int d, f2::Matrix m);

    const std::vector<std::string>& labels(int d) const;
    void set_labels(int d, std::vector<std::string> labels);

    /// Sq^op applied to a degree-d vector.
    f2::BitVector act(int op, int d, const f2::BitVector& v) const;
    /// A word applied to a degree-d vector (rightmost letter first).
    f2::BitVector act(const Word& w, int d, const f2::BitVector& v) const;
    /// An element of A(1) (coordinates over the algebra basis) of pure degree e.
    f2::BitVector act(const f2::BitVector& a, int e, int d, const f2::BitVector& v) const;
    /// Matrix of the composite word from degree d.
    f2::Matrix word_matrix(const Word& w, int d) const;

    /// sq1 sq1 = 0 and sq2 sq2 = sq1 sq2 sq1 in every degree.
    CheckReport validate() const;

    friend bool operator==(const A1Module&, const A1Module&) = default;

private:
    std::size_t slot(int d) const { return static_cast<std::size_t>(d - lo_); }
    bool in_range(int d) const { return d >= lo_ && d <= hi(); }

    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<f2::Matrix> sq1_;
    std::vector<f2::Matrix> sq2_;
    std::vector<std::vector<std::string>> labels_;
    std::optional<int> ceiling_;
};

/// Free module on generators of the given degrees, kept through degree `through`. Degree t has
/// basis (k, a) for each generator k and each algebra basis element a of degree t - deg(k),
/// ordered by k then by algebra index. Labels read "Sq1Sq2*g3".
A1Module free_module(const std::vector<int>& generator_degrees, int through);
/// Position of (generator k, algebra element a) inside degree deg(k)+deg(a) of free_module.
std::size_t free_index(const std::vector<int>& generator_degrees, std::size_t k, std::size_t a);

/// F2 in a single degree.
A1Module trivial_module(int degree);
A1Module direct_sum(const std::vector<A1Module>& parts);
/// Same module in a new basis: degree d basis vectors are the columns of change[d - lo()].
A1Module change_of_basis(const A1Module& m, const std::vector<f2::Matrix>& change);
/// Shift every degree by k.
A1Module shift(const A1Module& m, int k);

enum class Freeness { Free, NotFree, Unknown };
std::string to_string(Freeness f);

struct FreenessReport {
    Freeness outcome = Freeness::Unknown;
    std::vector<int> generator_degrees;  // minimal generators found through the reliable range
    std::vector<int> q0_homology_degrees; // degrees with nonzero Margolis homology (reliable range)
    std::vector<int> q1_homology_degrees;
    std::string reason;
};

/// Whether m is a sum of shifted copies of A(1). For a truncated module only degrees the
/// ceiling cannot influence are used; when that is not enough the outcome is Unknown.
FreenessReport is_free(const A1Module& m);

/// Degrees of a minimal generating set (the cover F -> m is onto; only degrees <= hi()).
std::vector<int> minimal_generator_degrees(const A1Module& m);

nlohmann::json to_json(const A1Module& m);
A1Module module_from_json(const nlohmann::json& j);

} // namespace bord::a1
