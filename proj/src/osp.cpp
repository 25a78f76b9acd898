#include "glmn/osp.hpp"

#include <utility>

#include "glmn/error.hpp"
#include "glmn/superjordan.hpp"

namespace glmn {

bool RelationReport::all_hold() const {
    for (const auto& check : checks) {
        if (!check.holds) {
            return false;
        }
    }
    return true;
}

SuperMatrix odd_f(const SuperMatrix& e, const SuperMatrix& F) {
    if (!e.in_odd_subspace()) {
        throw ParityMismatch("e must lie in the odd subspace");
    }
    if (!F.in_even_subspace()) {
        throw ParityMismatch("F must lie in the even subspace");
    }
    return F * e - e * F;
}

bool is_embeddable_params(const OrbitParams& p) {
    return embeddability_violations(p).empty();
}

std::vector<std::string> embeddability_violations(const OrbitParams& p) {
    std::vector<std::string> reasons;
    for (int pos = 1; pos <= p.t(); ++pos) {
        if (p.column_marked_at(pos) && p.row_marked_at(pos)) {
            reasons.push_back("marker overlap at block " + std::to_string(pos));
        }
    }
    for (int pos = 1; pos <= p.t(); ++pos) {
        if (!p.column_marked_at(pos) && !p.row_marked_at(pos)) {
            reasons.push_back("marker gap at block " + std::to_string(pos));
        }
    }
    if (p.tail() != 0) {
        reasons.push_back("s = " + std::to_string(p.tail()) + " != 0");
    }
    return reasons;
}

Osp12Quintuple construct_osp12(const OrbitParams& p) {
    const auto reasons = embeddability_violations(p);
    if (!reasons.empty()) {
        std::string message;
        for (const auto& r : reasons) {
            if (!message.empty()) {
                message += "; ";
            }
            message += r;
        }
        throw NotEmbeddable(message);
    }
    Sl2Triple triple = sl2_triple_for(p);
    SuperMatrix e = representative(p);
    SuperMatrix f = odd_f(e, triple.F);
    Osp12Quintuple q{std::move(e), std::move(f), std::move(triple.H), std::move(triple.E),
                     std::move(triple.F)};
    if (!verify_osp12(q).all_hold()) {
        throw InternalRelationFailure("constructed quintuple violates a defining relation");
    }
    return q;
}

RelationReport verify_osp12(const Osp12Quintuple& q) {
    const int m = q.e.even_dim();
    const int n = q.e.odd_dim();
    for (const SuperMatrix* g : {&q.f, &q.H, &q.E, &q.F}) {
        if (g->even_dim() != m || g->odd_dim() != n) {
            throw DimensionMismatch("quintuple members have different gradings");
        }
    }
    if (!q.e.in_odd_subspace() || !q.f.in_odd_subspace()) {
        throw ParityMismatch("e and f must lie in the odd subspace");
    }
    if (!q.H.in_even_subspace() || !q.E.in_even_subspace() || !q.F.in_even_subspace()) {
        throw ParityMismatch("H, E and F must lie in the even subspace");
    }

    const Rational two(2);
    RelationReport report;
    auto check = [&report](const std::string& name, SuperMatrix residual) {
        RelationCheck entry;
        entry.name = name;
        entry.holds = residual.is_zero();
        if (!entry.holds) {
            entry.residual = std::move(residual);
        }
        report.checks.push_back(std::move(entry));
    };
    check("[H,E]=2E", supercommutator(q.H, q.E) - two * q.E);
    check("[H,F]=-2F", supercommutator(q.H, q.F) + two * q.F);
    check("[E,F]=H", supercommutator(q.E, q.F) - q.H);
    check("[H,e]=e", supercommutator(q.H, q.e) - q.e);
    check("[H,f]=-f", supercommutator(q.H, q.f) + q.f);
    check("[E,f]=e", supercommutator(q.E, q.f) - q.e);
    check("[E,e]=0", supercommutator(q.E, q.e));
    check("[F,e]=f", supercommutator(q.F, q.e) - q.f);
    check("[F,f]=0", supercommutator(q.F, q.f));
    check("[e,e]=2E", supercommutator(q.e, q.e) - two * q.E);
    check("[f,f]=-2F", supercommutator(q.f, q.f) + two * q.F);
    check("[e,f]=-H", supercommutator(q.e, q.f) + q.H);
    return report;
}

bool is_embeddable_matrix(const SuperMatrix& x) {
    if (!x.in_odd_subspace()) {
        throw NotOdd("embeddability is defined for odd elements");
    }
    if (!is_nilpotent(x)) {
        throw NotNilpotent("embeddability is defined for nilpotent elements");
    }
    for (const auto& block : superjordan_decompose(x).blocks) {
        if (block.size % 2 == 0) {
            return false;
        }
    }
    return true;
}

} // namespace glmn
