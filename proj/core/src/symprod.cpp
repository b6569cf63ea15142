#include "isingff/symprod.hpp"

#include <stdexcept>

namespace isingff {

SymModule::SymModule(const std::vector<std::pair<DiffOp, int>>& factors) {
    for (const auto& [op, mult] : factors) {
        if (op.order() == 1) {
            // first-order factor: u'/u = -c0/c1 twists the derivation
            RatFunc logd = -(op.coeff(0) / op.coeff(1));
            for (int i = 0; i < mult; ++i) twist_ = twist_ + logd;
            continue;
        }
        if (op.order() != 2) throw std::invalid_argument("symmetric factors must be order one or two");
        Group g;
        g.p = -(op.coeff(1) / op.coeff(2));
        g.q = -(op.coeff(0) / op.coeff(2));
        g.mult = mult;
        groups_.push_back(std::move(g));
        dims_.push_back(mult + 1);
        dim_ *= mult + 1;
    }
}

int SymModule::index(const std::vector<int>& js) const {
    int r = 0;
    for (size_t g = 0; g < js.size(); ++g) r = r * dims_[g] + js[g];
    return r;
}

std::vector<RatFunc> SymModule::theta(const std::vector<RatFunc>& v) const {
    std::vector<RatFunc> out(dim_);
    std::vector<int> js(groups_.size());
    for (int i = 0; i < dim_; ++i) {
        if (v[i].is_zero()) continue;
        // decode index
        int rest = i;
        for (int g = static_cast<int>(groups_.size()) - 1; g >= 0; --g) {
            js[g] = rest % dims_[g];
            rest /= dims_[g];
        }
        out[i] = out[i] + v[i].derivative();
        if (!twist_.is_zero()) out[i] = out[i] + v[i] * twist_;
        for (size_t g = 0; g < groups_.size(); ++g) {
            int j = js[g], k = groups_[g].mult;
            // d/dt (u')^j u^(k-j) = j p w_j + j q w_(j-1) + (k-j) w_(j+1)
            if (j > 0) {
                out[i] = out[i] + v[i] * groups_[g].p * Rational(j);
                js[g] = j - 1;
                int lo = index(js);
                out[lo] = out[lo] + v[i] * groups_[g].q * Rational(j);
                js[g] = j;
            }
            if (j < k) {
                js[g] = j + 1;
                int hi = index(js);
                out[hi] = out[hi] + v[i] * Rational(k - j);
                js[g] = j;
            }
        }
    }
    return out;
}

std::vector<RatFunc> SymModule::generator() const {
    std::vector<RatFunc> v(dim_);
    v[0] = RatFunc::constant(Rational(1));
    return v;
}

std::vector<RatFunc> SymModule::image_of(const DiffOp& op) const {
    std::vector<RatFunc> out(dim_);
    std::vector<RatFunc> cur = generator();
    for (int k = 0; k <= op.order(); ++k) {
        if (k > 0) cur = theta(cur);
        if (op.coeff(k).is_zero()) continue;
        for (int i = 0; i < dim_; ++i) out[i] = out[i] + cur[i] * op.coeff(k);
    }
    return out;
}

DiffOp SymModule::minimal_annihilator(const std::vector<RatFunc>& v) const {
    std::vector<std::vector<RatFunc>> rows{v};
    for (int r = 1; r <= dim_ + 1; ++r) {
        rows.push_back(theta(rows.back()));
        // try to solve rows[r] = sum alpha_i rows[i], i < r
        int m = static_cast<int>(rows.size()) - 1;
        std::vector<std::vector<RatFunc>> a(dim_, std::vector<RatFunc>(m));
        std::vector<RatFunc> rhs(dim_);
        for (int j = 0; j < dim_; ++j) {
            for (int i = 0; i < m; ++i) a[j][i] = rows[i][j];
            rhs[j] = rows[m][j];
        }
        std::vector<int> pivot_row;
        std::vector<bool> used(dim_, false);
        bool rank_deficient = false;
        for (int c = 0; c < m; ++c) {
            int p = -1;
            for (int j = 0; j < dim_; ++j)
                if (!used[j] && !a[j][c].is_zero()) {
                    p = j;
                    break;
                }
            if (p < 0) {
                rank_deficient = true;
                break;
            }
            used[p] = true;
            pivot_row.push_back(p);
            for (int j = 0; j < dim_; ++j) {
                if (j == p || a[j][c].is_zero()) continue;
                RatFunc f = a[j][c] / a[p][c];
                for (int cc = c; cc < m; ++cc) a[j][cc] = a[j][cc] - a[p][cc] * f;
                rhs[j] = rhs[j] - rhs[p] * f;
            }
        }
        if (rank_deficient) throw std::logic_error("degenerate symmetric module (dependent derivatives)");
        bool consistent = true;
        for (int j = 0; j < dim_; ++j)
            if (!used[j] && !rhs[j].is_zero()) {
                consistent = false;
                break;
            }
        if (!consistent) continue;
        std::vector<RatFunc> c(m + 1);
        c[m] = RatFunc::constant(Rational(1));
        for (int i = 0; i < m; ++i) c[i] = -(rhs[pivot_row[i]] / a[pivot_row[i]][i]);
        return DiffOp(std::move(c));
    }
    throw std::logic_error("no linear dependency found up to module dimension");
}

DiffOp symmetric_power(const DiffOp& op2, int k) {
    if (k == 1) return op2;
    SymModule mod({{op2, k}});
    return mod.minimal_annihilator(mod.generator());
}

DiffOp identity_residual(const std::vector<DiffOp>& lhs, const std::vector<DiffOp>& rhs) {
    auto compose_all = [](const std::vector<DiffOp>& ops) {
        DiffOp acc = DiffOp::identity();
        for (const auto& op : ops) acc = acc * op;
        return acc;
    };
    return compose_all(lhs) - compose_all(rhs);
}

DiffOp symmetric_product(const std::vector<DiffOp>& ops) {
    std::vector<std::pair<DiffOp, int>> groups;
    for (const auto& op : ops) {
        bool merged = false;
        for (auto& [g, m] : groups)
            if (DiffOp::same_normalized(g, op)) {
                ++m;
                merged = true;
                break;
            }
        if (!merged) groups.emplace_back(op, 1);
    }
    SymModule mod(groups);
    return mod.minimal_annihilator(mod.generator());
}

} // namespace isingff
