#pragma once

#include "isingff/diffop.hpp"

#include <vector>

namespace isingff {

// Minimal annihilator machinery for symmetric powers and symmetric products
// of second-order operators. The k-fold products of solutions of one factor
// span the module with basis (u')^j u^(k-j); several factors tensor together.
// Derivatives of the generator u^k (or of an image vector J(u^k)) are reduced
// against u'' = p u' + q u in each factor, and the first linear dependency
// over Q(t) yields the operator.
class SymModule {
  public:
    // factors: (second-order operator, multiplicity)
    explicit SymModule(const std::vector<std::pair<DiffOp, int>>& factors);

    int dim() const { return dim_; }
    // derivation applied to a coefficient vector
    std::vector<RatFunc> theta(const std::vector<RatFunc>& v) const;
    // generator u1^k1 * u2^k2 * ... (index all zero)
    std::vector<RatFunc> generator() const;
    // vector representing op applied to the generator (op in D, t)
    std::vector<RatFunc> image_of(const DiffOp& op) const;
    // minimal monic-in-D operator annihilating every specialization of v
    DiffOp minimal_annihilator(const std::vector<RatFunc>& v) const;

  private:
    struct Group {
        RatFunc p, q; // u'' = p u' + q u
        int mult;
    };
    int index(const std::vector<int>& js) const;
    std::vector<Group> groups_;
    std::vector<int> dims_;
    RatFunc twist_; // logarithmic derivative contributed by first-order factors
    int dim_ = 1;
};

// minimal operator annihilating all k-fold products of solutions of op2
DiffOp symmetric_power(const DiffOp& op2, int k);

// minimal operator annihilating products of one solution from each factor;
// repeated factors are treated symmetrically (equal operators are grouped)
DiffOp symmetric_product(const std::vector<DiffOp>& ops);

// compose each side left to right and subtract; zero means the identity holds
DiffOp identity_residual(const std::vector<DiffOp>& lhs, const std::vector<DiffOp>& rhs);

} // namespace isingff
