#pragma once

#include "bord/f2/matrix.hpp"
#include "bord/ring/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bord::ring {

struct Generator {
    std::string name;
    int degree = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Monomials whose residue classes form a basis of one graded piece.
struct DegreeBasis {
    int degree = 0;
    std::vector<Monomial> monomials;
    std::size_t dim() const { return monomials.size(); }
};

/// Graded-commutative F2 algebra given by generators and homogeneous relations, asserted
/// complete through `degree_bound`. Each graded piece is the quotient of the span of its
/// monomials by the span of {relation * monomial}; monomials are ordered lexicographically
/// on the generator list (first generator most significant) and the lowest monomial of each
/// relation row is eliminated, so the surviving basis consists of the larger monomials.
class RingPresentation {
public:
    RingPresentation() = default;
    RingPresentation(std::string name, std::vector<Generator> generators, std::vector<Polynomial> relations,
                     int degree_bound);

    const std::string& name() const { return name_; }
    const std::vector<Generator>& generators() const { return generators_; }
    std::size_t num_generators() const { return generators_.size(); }
    const std::vector<int>& generator_degrees() const { return degrees_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    int degree_bound() const { return degree_bound_; }

    std::optional<std::size_t> generator_index(std::string_view name) const;
    Polynomial generator(std::string_view name) const;
    Polynomial zero() const { return Polynomial::zero(num_generators()); }
    Polynomial one() const { return Polynomial::one(num_generators()); }

    int degree(const Monomial& m) const { return m.degree(degrees_); }
    /// Degree of a homogeneous polynomial; nothing for zero; InputError when inhomogeneous.
    std::optional<int> degree(const Polynomial& p) const;

    /// Every monomial of degree d in the free algebra, lexicographically ascending. Not
    /// limited by the degree bound.
    std::vector<Monomial> monomials_of_degree(int d) const;

    const DegreeBasis& monomial_basis(int d) const;
    std::size_t dim(int d) const { return monomial_basis(d).dim(); }

    /// Coordinates of the residue class of p in monomial_basis(deg p). Zero input gives an
    /// empty vector unless a degree is supplied.
    f2::BitVector reduce(const Polynomial& p) const;
    f2::BitVector reduce(const Polynomial& p, int degree) const;
    Polynomial from_coordinates(int degree, const f2::BitVector& coords) const;
    Polynomial normal_form(const Polynomial& p) const;
    bool in_ideal(const Polynomial& p) const { return normal_form(p).is_zero(); }
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const;

    /// Parses sums of products such as "x5 + x2x3", "x2^2y4", "1" or "0". Generator names are
    /// one letter (ASCII or a UTF-8 code point such as α) followed by optional digits.
    Polynomial parse(std::string_view text) const;
    std::string format(const Polynomial& p) const;
    std::string format(const Monomial& m) const;

private:
    struct DegreeData {
        std::vector<Monomial> monomials;
        std::map<Monomial, std::size_t> index;
        f2::Subspace relation_span;
        std::vector<std::size_t> basis_columns;
        DegreeBasis basis;
    };
    struct Cache {
        std::mutex mutex;
        std::map<int, std::shared_ptr<const DegreeData>> by_degree;
    };

    const DegreeData& data(int d) const;
    DegreeData build(int d) const;
    f2::BitVector monomial_vector(const Polynomial& p, const DegreeData& dd) const;

    std::string name_;
    std::vector<Generator> generators_;
    std::vector<int> degrees_;
    std::vector<Polynomial> relations_;
    int degree_bound_ = 0;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

} // namespace bord::ring
