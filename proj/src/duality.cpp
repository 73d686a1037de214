#include "setlat/duality.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "setlat/lp.hpp"

namespace setlat {

namespace {

struct GData {
    Mat G;   // single affine piece {Gx + cg} (+) Q on dom
    Vec cg;
    const UpperSet* Q = nullptr;
    const Polyhedron* dom = nullptr;
    bool empty_map = false;  // g(x) = EMPTY everywhere
};

GData g_data(const ProblemInstance& inst) {
    GData d;
    const auto& pieces = inst.g.pieces();
    if (pieces.empty()) {
        d.empty_map = true;
        return d;
    }
    if (pieces.size() != 1)
        throw std::invalid_argument("duality: constraint map must have a single affine piece");
    d.G = pieces[0].F;
    d.cg = pieces[0].c;
    d.Q = &pieces[0].Q;
    d.dom = &inst.g.domain();
    if (d.Q->is_empty()) d.empty_map = true;
    return d;
}

void append_rows(Mat& M, Vec& r, const Mat& Madd, const Vec& radd) {
    Mat M2(M.rows() + Madd.rows(), M.cols());
    Vec r2(r.size() + radd.size());
    M2 << M, Madd;
    r2 << r, radd;
    M = std::move(M2);
    r = std::move(r2);
}

/// Rows over x for {x : x in dom f and dom g, y in g(x)}; the range
/// [g_row_begin, g_row_begin + #Q-halfspaces) holds the tail rows whose
/// multipliers yield y*. Returns false when the system is trivially empty.
bool level_system(const ProblemInstance& inst, const GData& gd, const Vec& y, Mat& M, Vec& r,
                  int* g_row_begin = nullptr) {
    if (gd.empty_map) return false;
    const int n = inst.n();
    M = inst.f.domain().E;
    r = inst.f.domain().e;
    append_rows(M, r, gd.dom->E, gd.dom->e);
    if (g_row_begin) *g_row_begin = static_cast<int>(M.rows());
    if (gd.Q->is_proper()) {
        const auto& hs = gd.Q->halfspaces();
        Mat Mg(static_cast<int>(hs.size()), n);
        Vec rg(static_cast<int>(hs.size()));
        for (size_t k = 0; k < hs.size(); ++k) {
            Mg.row(static_cast<int>(k)) = hs[k].normal.transpose() * gd.G;
            rg(static_cast<int>(k)) = hs[k].normal.dot(y - gd.cg) - hs[k].offset;
        }
        append_rows(M, r, Mg, rg);
    }
    return true;
}

}  // namespace

ProblemInstance make_instance(SetValuedMap f, SetValuedMap g) {
    return ProblemInstance{std::move(f), std::move(g)};
}

bool feasible(const ProblemInstance& inst, const Vec& x) {
    UpperSet gx = inst.g.value(x);
    bool via_member = member(gx, Vec::Zero(inst.m()));
    bool via_meet;
    if (gx.is_empty()) {
        via_meet = false;
    } else if (gx.is_full()) {
        via_meet = true;  // -D always contains 0
    } else {
        const auto& hs = gx.halfspaces();
        const auto& dplus = inst.D().dual_generators();
        Mat M(hs.size() + dplus.size(), inst.m());
        Vec r(M.rows());
        int i = 0;
        for (const auto& h : hs) {
            M.row(i) = -h.normal.transpose();
            r(i++) = -h.offset;
        }
        for (const auto& a : dplus) {  // z in -D: a.z <= 0
            M.row(i) = a.transpose();
            r(i++) = 0.0;
        }
        via_meet = find_feasible(M, r).has_value();
    }
    if (via_member != via_meet)
        throw std::runtime_error("feasible: the two characterizations of 0 in g(x) disagree");
    return via_member;
}

UpperSet lagrangian(const ProblemInstance& inst, const Vec& x, const DualPair& pair) {
    UpperSet gx = inst.g.value(x);
    if (gx.is_empty()) return UpperSet::empty(inst.C());
    ExtReal inner = support(gx, pair.ystar);
    UpperSet fx = inst.f.value(x);
    if (inner.is_neg_inf()) return minkowski_add(fx, UpperSet::full(inst.C()));
    UpperSet S = pair.zstar.lpNorm<1>() <= kGeomTol
                     ? (inner.value() <= 0 ? UpperSet::full(inst.C()) : UpperSet::empty(inst.C()))
                     : from_hrep({{pair.zstar, inner.value()}}, inst.C());
    return minkowski_add(fx, S);
}

UpperSet reconstruct_primal(const ProblemInstance& inst, const Vec& x,
                            const std::vector<DualPair>& pairs) {
    std::vector<UpperSet> vals;
    for (const auto& pr : pairs) vals.push_back(lagrangian(inst, x, pr));
    UpperSet base = lattice_sup(vals, inst.C());
    if (base.is_empty() || feasible(inst, x)) return base;
    UpperSet gx = inst.g.value(x);
    if (gx.is_empty()) return UpperSet::empty(inst.C());
    // 0 violates some facet of g(x); that normal separates and lives in D+.
    Vec ysep;
    double margin = 0.0;
    for (const auto& h : gx.halfspaces())
        if (h.offset > margin) {
            margin = h.offset;
            ysep = h.normal;
        }
    if (ysep.size() == 0) return base;  // numerically feasible after all
    // Escalating y* to n*ysep adds n*margin to the half-space offset in some
    // fixed direction zbar, so over the full (unrestricted) pair family the
    // supremum is empty as soon as those offsets diverge. Finitely many
    // half-spaces with normals in C+ always intersect, so divergence of the
    // scalar offsets is the only finite certificate available.
    UpperSet fx = inst.f.value(x);
    if (!fx.is_proper()) return fx.is_empty() ? UpperSet::empty(inst.C()) : base;
    Vec zbar = fx.halfspaces().front().normal;
    std::optional<double> prev;
    for (int n = 1; n <= 1024; n *= 2) {
        UpperSet ln = lagrangian(inst, x, DualPair{static_cast<double>(n) * ysep, zbar});
        if (ln.is_empty()) return UpperSet::empty(inst.C());
        ExtReal s = support(ln, zbar);
        if (s.is_pos_inf()) return UpperSet::empty(inst.C());
        if (s.is_finite()) {
            if (prev && s.value() > *prev + kGeomTol) return UpperSet::empty(inst.C());
            prev = s.value();
        }
    }
    return base;
}

UpperSet value_function(const ProblemInstance& inst, const Vec& y) {
    if (y.size() != inst.m()) throw std::invalid_argument("value_function: y dimension");
    GData gd = g_data(inst);
    Mat M;
    Vec r;
    if (!level_system(inst, gd, y, M, r)) return UpperSet::empty(inst.C());
    PolyVRep vr = enumerate_vrep(Polyhedron{M, r});
    if (vr.vertices.empty()) return UpperSet::empty(inst.C());
    std::vector<UpperSet> parts;
    for (const auto& p : inst.f.pieces()) {
        if (p.Q.is_empty()) continue;
        if (p.Q.is_full()) return UpperSet::full(inst.C());
        std::vector<Vec> pts, rays = p.Q.rays();
        for (const auto& xv : vr.vertices) {
            Vec shift = p.F * xv + p.c;
            for (const auto& qv : p.Q.vertices()) pts.push_back(qv + shift);
        }
        for (const auto& xr : vr.rays) {
            Vec dir = p.F * xr;
            if (dir.lpNorm<1>() > kGeomTol) rays.push_back(dir);
        }
        parts.push_back(upper_close(pts, rays, inst.C()));
    }
    return lattice_inf(parts, inst.C());
}

UpperSet dual_objective(const ProblemInstance& inst, const DualPair& pair) {
    if (pair.zstar.lpNorm<1>() <= kGeomTol || !inst.C().dual_contains(pair.zstar))
        throw std::invalid_argument("dual_objective: z* must lie in C+ \\ {0}");
    GData gd = g_data(inst);
    if (gd.empty_map) return UpperSet::empty(inst.C());
    Mat M = inst.f.domain().E;
    Vec r = inst.f.domain().e;
    append_rows(M, r, gd.dom->E, gd.dom->e);
    if (!find_feasible(M, r)) return UpperSet::empty(inst.C());
    ExtReal suppg = support(*gd.Q, pair.ystar);
    if (suppg.is_neg_inf()) return UpperSet::full(inst.C());
    ExtReal offset = ExtReal::pos_inf();
    for (const auto& p : inst.f.pieces()) {
        if (p.Q.is_empty()) continue;
        ExtReal suppQ = support(p.Q, pair.zstar);
        if (suppQ.is_neg_inf()) return UpperSet::full(inst.C());
        LinearProgram lp;
        lp.c = p.F.transpose() * pair.zstar + gd.G.transpose() * pair.ystar;
        lp.M = M;
        lp.r = r;
        LPOutcome res = solve_lp(lp);
        if (res.status == LPStatus::UNBOUNDED) return UpperSet::full(inst.C());
        if (res.status != LPStatus::OPTIMAL)
            throw std::runtime_error("dual_objective: LP failed on a feasible region");
        ExtReal cand = ExtReal(res.optimal_value.value() + pair.zstar.dot(p.c) +
                               pair.ystar.dot(gd.cg)) +
                       suppQ + suppg;
        offset = min(offset, cand);
    }
    if (offset.is_pos_inf()) return UpperSet::empty(inst.C());
    return from_hrep({{pair.zstar, offset.value()}}, inst.C());
}

std::vector<Vec> feasible_vertices(const ProblemInstance& inst) {
    GData gd = g_data(inst);
    Mat M;
    Vec r;
    if (!level_system(inst, gd, Vec::Zero(inst.m()), M, r)) return {};
    return enumerate_vrep(Polyhedron{M, r}).vertices;
}

UpperSet primal_value(const ProblemInstance& inst) {
    return value_function(inst, Vec::Zero(inst.m()));
}

UpperSet dual_value(const ProblemInstance& inst, const std::vector<DualPair>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("dual_value: empty pair family");
    std::vector<UpperSet> hs;
    for (const auto& pr : pairs) hs.push_back(dual_objective(inst, pr));
    return lattice_sup(hs, inst.C());
}

SetValuedMap lifted_value_map(const ProblemInstance& inst) {
    GData gd = g_data(inst);
    const int n = inst.n(), m = inst.m();
    if (gd.empty_map) {
        Mat E(1, n + m);  // 0 <= -1: empty domain
        E.setZero();
        Vec e = Vec::Constant(1, -1.0);
        return SetValuedMap::affine(Polyhedron{E, e}, {}, inst.C());
    }
    // domain over (x, y): x in dom f and dom g, y in g(x)
    int rows = static_cast<int>(inst.f.domain().E.rows() + gd.dom->E.rows());
    int qrows = gd.Q->is_proper() ? static_cast<int>(gd.Q->halfspaces().size()) : 0;
    Mat E(rows + qrows, n + m);
    Vec e(rows + qrows);
    E.setZero();
    E.block(0, 0, inst.f.domain().E.rows(), n) = inst.f.domain().E;
    e.head(inst.f.domain().E.rows()) = inst.f.domain().e;
    E.block(inst.f.domain().E.rows(), 0, gd.dom->E.rows(), n) = gd.dom->E;
    e.segment(inst.f.domain().E.rows(), gd.dom->E.rows()) = gd.dom->e;
    for (int k = 0; k < qrows; ++k) {
        const auto& h = gd.Q->halfspaces()[k];
        E.block(rows + k, 0, 1, n) = h.normal.transpose() * gd.G;
        E.block(rows + k, n, 1, m) = -h.normal.transpose();
        e(rows + k) = -h.offset - h.normal.dot(gd.cg);
    }
    std::vector<SetValuedMap::Piece> pieces;
    for (const auto& p : inst.f.pieces()) {
        Mat F(inst.q(), n + m);
        F.setZero();
        F.leftCols(n) = p.F;
        pieces.emplace_back(F, p.c, p.Q);
    }
    return SetValuedMap::affine(Polyhedron{E, e}, std::move(pieces), inst.C());
}

UpperSet value_conjugate(const ProblemInstance& inst, const Vec& ystar, const Vec& zstar) {
    Vec xs(inst.n() + inst.m());
    xs.setZero();
    xs.tail(inst.m()) = ystar;
    return conjugate(lifted_value_map(inst), xs, zstar);
}

WeakDualityReport weak_duality_check(const ProblemInstance& inst, const std::vector<Vec>& xs,
                                     const std::vector<DualPair>& pairs) {
    WeakDualityReport rep;
    for (const auto& x : xs) {
        if (!feasible(inst, x)) continue;
        UpperSet fx = inst.f.value(x);
        for (const auto& pr : pairs) {
            UpperSet h = dual_objective(inst, pr);
            UpperSet lhs = minkowski_add(fx, S_of(pr.zstar, inst.C()));
            bool form_a = contains(h, lhs);
            ExtReal ph = support(h, pr.zstar);
            ExtReal pf = support(fx, pr.zstar);
            bool form_b = ph.raw() <= pf.raw() + kGeomTol * (1.0 + std::abs(pf.raw()));
            if (pf.is_pos_inf()) form_b = true;
            ++rep.checked;
            if (form_a != form_b || !form_a) {
                rep.pass = false;
                if (rep.witness.empty()) {
                    std::ostringstream os;
                    os << "x=[" << x.transpose() << "] y*=[" << pr.ystar.transpose() << "] z*=["
                       << pr.zstar.transpose() << "] phi_h=" << ph.str() << " phi_f=" << pf.str()
                       << (form_a != form_b ? " (forms disagree)" : " (violation)");
                    rep.witness = os.str();
                }
            }
        }
    }
    return rep;
}

SlaterResult slater_check(const ProblemInstance& inst) {
    SlaterResult res;
    const auto& dplus = inst.D().dual_generators();
    const int n = inst.n(), m = inst.m();
    {
        Mat My(static_cast<int>(dplus.size()), m);
        Vec ry(static_cast<int>(dplus.size()));
        for (size_t j = 0; j < dplus.size(); ++j) {
            My.row(static_cast<int>(j)) = dplus[j].transpose();
            ry(static_cast<int>(j)) = -kSlaterMargin;
        }
        if (!find_feasible(My, ry)) {
            res.status = SlaterStatus::INAPPLICABLE;  // int D is empty
            return res;
        }
    }
    GData gd = g_data(inst);
    if (gd.empty_map) return res;  // FAILS
    int rows = static_cast<int>(inst.f.domain().E.rows() + gd.dom->E.rows());
    int qrows = gd.Q->is_proper() ? static_cast<int>(gd.Q->halfspaces().size()) : 0;
    int drows = static_cast<int>(dplus.size());
    Mat M(rows + qrows + drows, n + m);
    Vec r(rows + qrows + drows);
    M.setZero();
    M.block(0, 0, inst.f.domain().E.rows(), n) = inst.f.domain().E;
    r.head(inst.f.domain().E.rows()) = inst.f.domain().e;
    M.block(inst.f.domain().E.rows(), 0, gd.dom->E.rows(), n) = gd.dom->E;
    r.segment(inst.f.domain().E.rows(), gd.dom->E.rows()) = gd.dom->e;
    for (int k = 0; k < qrows; ++k) {
        const auto& h = gd.Q->halfspaces()[k];
        M.block(rows + k, 0, 1, n) = h.normal.transpose() * gd.G;
        M.block(rows + k, n, 1, m) = -h.normal.transpose();
        r(rows + k) = -h.offset - h.normal.dot(gd.cg);
    }
    for (int j = 0; j < drows; ++j) {
        M.block(rows + qrows + j, n, 1, m) = dplus[static_cast<size_t>(j)].transpose();
        r(rows + qrows + j) = -kSlaterMargin;
    }
    auto pt = find_feasible(M, r);
    if (pt) {
        res.status = SlaterStatus::HOLDS;
        res.xbar = pt->head(n);
        res.ybar = pt->tail(m);
    }
    return res;
}

StrongDualityResult solve_strong(const ProblemInstance& inst) {
    StrongDualityResult out{ValueReport{UpperSet::empty(inst.C()), UpperSet::empty(inst.C()), {},
                                        false, false, 0.0, ""},
                            DualSolutionSet{}};
    ValueReport& rep = out.report;
    SlaterResult sl = slater_check(inst);
    rep.slater = sl.status == SlaterStatus::HOLDS;
    rep.p = primal_value(inst);
    if (rep.p.is_empty()) {
        rep.d = rep.p;
        rep.note = "no strong-duality certificate: primal value is EMPTY (no feasible point)";
        return out;
    }
    if (rep.p.is_full()) {
        rep.d = rep.p;  // weak duality pins d between p and Z
        rep.certified = true;
        rep.note = "p = Z; d = p by weak duality, dual solution set empty";
        return out;
    }
    if (!rep.slater) rep.note = "no strong-duality certificate: Slater condition not verified";
    GData gd = g_data(inst);
    Mat M0;
    Vec r0;
    int g_begin = 0;
    if (!level_system(inst, gd, Vec::Zero(inst.m()), M0, r0, &g_begin))
        throw std::runtime_error("solve_strong: feasible system vanished after p was computed");
    static const std::vector<Halfspace> no_hs;
    const auto& qhs = gd.Q->is_proper() ? gd.Q->halfspaces() : no_hs;
    bool all_ok = true;
    std::vector<Halfspace> dual_hs;
    for (const auto& facet : rep.p.halfspaces()) {
        const Vec& zs = facet.normal;
        ExtReal pz = ExtReal::pos_inf();
        Vec best_mu;
        for (const auto& piece : inst.f.pieces()) {
            if (piece.Q.is_empty()) continue;
            ExtReal suppQ = support(piece.Q, zs);
            if (suppQ.is_neg_inf()) {
                pz = ExtReal::neg_inf();
                break;
            }
            LinearProgram lp;
            lp.c = piece.F.transpose() * zs;
            lp.M = M0;
            lp.r = r0;
            LPOutcome res = solve_lp(lp);
            if (res.status == LPStatus::UNBOUNDED) {
                pz = ExtReal::neg_inf();
                break;
            }
            if (res.status != LPStatus::OPTIMAL)
                throw std::runtime_error("solve_strong: scalar primal LP failed");
            ExtReal cand = ExtReal(res.optimal_value.value() + zs.dot(piece.c)) + suppQ;
            if (cand < pz) {
                pz = cand;
                best_mu = res.multipliers;
            }
        }
        if (!pz.is_finite()) continue;  // the theorem's -inf guard excludes this direction
        Vec ystar = Vec::Zero(inst.m());
        for (size_t k = 0; k < qhs.size(); ++k)
            ystar += best_mu(g_begin + static_cast<int>(k)) * qhs[k].normal;
        UpperSet h = dual_objective(inst, DualPair{ystar, zs});
        ExtReal dz = support(h, zs);
        DirectionRow row{zs, pz, dz, ystar};
        rep.table.push_back(row);
        double scale = 1.0 + std::abs(pz.value());
        if (!dz.is_finite() || std::abs(dz.value() - pz.value()) > kDualTol * scale) {
            all_ok = false;
            rep.note = "scalar dual value differs from p_{z*} at a facet direction";
            continue;
        }
        // membership of Delta, both characterizations
        UpperSet pS = minkowski_add(rep.p, S_of(zs, inst.C()));
        bool set_form = !pS.is_full() && set_equal(pS, h, kDualTol);
        bool scalar_form = pz.is_finite() && std::abs(dz.value() - pz.value()) <= kDualTol * scale;
        if (set_form != scalar_form) {
            all_ok = false;
            rep.note = "Delta membership characterizations disagree";
            continue;
        }
        if (!set_form) continue;
        out.delta.entries.push_back(DualEntry{DualPair{ystar, zs}, dz.value(), pz.value()});
        dual_hs.push_back({zs, dz.value()});
    }
    if (out.delta.entries.empty()) {
        rep.d = rep.p;
        rep.note = rep.note.empty() ? "empty dual solution set" : rep.note;
        return out;
    }
    rep.d = from_hrep(dual_hs, inst.C());
    out.delta.complete = dual_hs.size() == rep.p.halfspaces().size();
    // gap certificate over the facet directions
    double gap = 0.0;
    for (const auto& facet : rep.p.halfspaces()) {
        ExtReal sp = support(rep.p, facet.normal);
        ExtReal sd = support(rep.d, facet.normal);
        if (sp.is_finite() && sd.is_finite()) gap = std::max(gap, std::abs(sp.value() - sd.value()));
    }
    rep.gap_certificate = gap;
    bool pd_equal = set_equal(rep.p, rep.d, kDualTol);
    // proof-step checks against a deterministic sample of other pairs:
    // every h(y*,z*) must contain p (so the Delta offsets are maximal and
    // no pair outside Delta can enlarge the supremum).
    std::mt19937 rng(911003u);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    PolyCone cplus = dual_cone(inst.C());
    const auto& cgen = cplus.generators();
    const auto& dgen = inst.D().dual_generators();
    for (int s = 0; s < 50 && all_ok; ++s) {
        Vec zs = Vec::Zero(inst.q());
        for (const auto& gvec : cgen) zs += unif(rng) * gvec;
        if (zs.lpNorm<1>() <= 1e-6) continue;
        Vec ys = Vec::Zero(inst.m());
        for (const auto& gvec : dgen) ys += 2.0 * unif(rng) * gvec;
        UpperSet h = dual_objective(inst, DualPair{ys, zs});
        if (!contains(h, rep.p, kDualTol)) {
            all_ok = false;
            rep.note = "weak-duality/maximality check failed on a sampled pair";
        }
        ExtReal sh = support(h, zs);
        ExtReal sp = support(rep.p, zs);
        if (sh.is_finite() && sp.is_finite() &&
            sh.value() > sp.value() + kDualTol * (1.0 + std::abs(sp.value()))) {
            all_ok = false;
            rep.note = "sampled pair exceeds the primal support (weak duality violated)";
        }
    }
    rep.certified = rep.slater && pd_equal && all_ok;
    if (rep.certified && rep.note.empty()) rep.note = "strong duality certified";
    if (!pd_equal && rep.note.empty()) rep.note = "p and d differ beyond tolerance";
    return out;
}

PSepProblem psep_build(const std::vector<SetValuedMap>& parts, const std::vector<Mat>& A,
                       const Vec& b) {
    if (parts.empty() || parts.size() != A.size())
        throw std::invalid_argument("psep_build: need one coupling matrix per part");
    const PolyCone& C = parts.front().cone();
    const int Mdim = static_cast<int>(b.size());
    int n_total = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (!(parts[i].cone() == C)) throw std::invalid_argument("psep_build: mixed image cones");
        if (!parts[i].is_affine() || parts[i].pieces().size() != 1)
            throw std::invalid_argument("psep_build: each part must be a single affine piece");
        if (A[i].rows() != Mdim || A[i].cols() != parts[i].arg_dim())
            throw std::invalid_argument("psep_build: coupling matrix dimensions");
        n_total += parts[i].arg_dim();
    }
    // block-assembled objective: F = [F_1 ... F_N], c = sum c_n, Q = (+)_n Q_n
    Mat F(C.dim(), n_total);
    Vec c = Vec::Zero(C.dim());
    F.setZero();
    UpperSet Q = parts.front().pieces()[0].Q;
    int col = 0, dom_rows = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        const auto& pc = parts[i].pieces()[0];
        F.middleCols(col, parts[i].arg_dim()) = pc.F;
        c += pc.c;
        if (i > 0) Q = minkowski_add(Q, pc.Q);
        col += parts[i].arg_dim();
        dom_rows += static_cast<int>(parts[i].domain().E.rows());
    }
    Mat E(dom_rows, n_total);
    Vec e(dom_rows);
    E.setZero();
    int row = 0;
    col = 0;
    for (const auto& part : parts) {
        const auto& dom = part.domain();
        E.block(row, col, dom.E.rows(), dom.E.cols()) = dom.E;
        e.segment(row, dom.E.rows()) = dom.e;
        row += static_cast<int>(dom.E.rows());
        col += part.arg_dim();
    }
    SetValuedMap f = SetValuedMap::affine(Polyhedron{E, e}, {{F, c, Q}}, C);
    Mat G(Mdim, n_total);
    col = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        G.middleCols(col, A[i].cols()) = A[i];
        col += static_cast<int>(A[i].cols());
    }
    PolyCone D = orthant(Mdim);
    UpperSet Qg = upper_close({Vec::Zero(Mdim)}, {}, D);
    SetValuedMap g =
        SetValuedMap::affine(Polyhedron::whole_space(n_total), {{G, -b, Qg}}, D);
    return PSepProblem{make_instance(std::move(f), std::move(g)), parts, A, b};
}

UpperSet psep_dual(const PSepProblem& ps, const Vec& v, const Vec& w) {
    const PolyCone& C = ps.inst.C();
    UpperSet h = S_pair(v, w, ps.b, C);
    for (size_t i = 0; i < ps.parts.size(); ++i)
        h = minkowski_add(h, conjugate(ps.parts[i], ps.A[i].transpose() * v, w));
    if (ps.inst.D().dual_contains(-v)) {
        // inside the orthant range the generic formula must agree
        UpperSet generic = dual_objective(ps.inst, DualPair{-v, w});
        if (!set_equal(h, generic, kDualTol))
            throw std::runtime_error("psep_dual: decomposed dual differs from the generic one");
    }
    return h;
}

}  // namespace setlat
