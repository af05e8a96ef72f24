#include "lattice.hpp"

#include <algorithm>
#include <sstream>

namespace mk3 {

std::string DivisorLabel::str() const {
    auto sg = [](int v) { return v > 0 ? "+" : "-"; };
    std::ostringstream os;
    switch (kind) {
        case Kind::D: os << "D" << i; break;
        case Kind::A: os << "A" << i; break;
        case Kind::B: os << "B" << i; break;
        case Kind::L: os << "l" << i << j << "^" << sg(e) << sg(d); break;
        case Kind::Lbar: os << "lb" << i << j << "^" << sg(e) << sg(d); break;
        case Kind::C: os << "C" << i << "^" << sg(e) << sg(d); break;
    }
    return os.str();
}

DivisorLabel parse_label(const std::string& s) {
    for (auto& l : divisor_catalogue())
        if (l.str() == s) return l;
    throw unknown_label("unknown divisor label: " + s);
}

std::vector<DivisorLabel> divisor_catalogue() {
    std::vector<DivisorLabel> out;
    for (int i = 1; i <= 3; ++i) out.push_back({DivisorLabel::Kind::D, i});
    for (int i = 1; i <= 3; ++i) out.push_back({DivisorLabel::Kind::A, i});
    for (int i = 1; i <= 3; ++i) out.push_back({DivisorLabel::Kind::B, i});
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}})
        for (int e : {1, -1})
            for (int d : {1, -1}) {
                out.push_back({DivisorLabel::Kind::L, i, j, e, d});
                out.push_back({DivisorLabel::Kind::Lbar, i, j, e, d});
            }
    for (int i = 1; i <= 3; ++i)
        for (int e : {1, -1})
            for (int d : {1, -1}) out.push_back({DivisorLabel::Kind::C, i, 2, e, d});
    return out;
}

namespace {

// coordinate constraint of a line: coordinate index -> (symbol, sign)
// symbol: 0 = sqrt(alpha), 1 = sqrt(alphabar)
using Constraint = std::map<int, std::pair<int, int>>;

Constraint line_constraints(const DivisorLabel& l) {
    if (l.kind == DivisorLabel::Kind::L) return {{l.i, {0, l.e}}, {l.j, {1, l.d}}};
    return {{l.i, {1, l.e}}, {l.j, {0, l.d}}};
}

DivisorLabel as_fiber_class(const DivisorLabel& l) {
    if (l.kind == DivisorLabel::Kind::A || l.kind == DivisorLabel::Kind::B)
        return {DivisorLabel::Kind::D, l.i};
    return l;
}

}  // namespace

int geometric_pairing(const DivisorLabel& a0, const DivisorLabel& b0) {
    DivisorLabel a = as_fiber_class(a0), b = as_fiber_class(b0);
    using K = DivisorLabel::Kind;
    if (a == b) return a.kind == K::D ? 0 : -2;
    if (a.kind != K::D && b.kind == K::D) std::swap(a, b);
    if (a.kind == K::C && (b.kind == K::L || b.kind == K::Lbar)) std::swap(a, b);

    if (a.kind == K::D && b.kind == K::D) return 2;
    if (a.kind == K::D && (b.kind == K::L || b.kind == K::Lbar))
        return line_constraints(b).count(a.i) ? 0 : 1;
    if (a.kind == K::D && b.kind == K::C) return a.i == b.i ? 0 : 1;
    if ((a.kind == K::L || a.kind == K::Lbar) && (b.kind == K::L || b.kind == K::Lbar)) {
        Constraint ca = line_constraints(a), cb = line_constraints(b);
        int shared = 0;
        for (auto& [idx, val] : ca) {
            auto it = cb.find(idx);
            if (it == cb.end()) continue;
            if (it->second != val) return 0;  // incompatible value at a shared coordinate
            ++shared;
        }
        if (shared == 2) return -2;  // identical constraints describe the same line
        // exactly one shared coordinate, values agree: a single transversal point
        return 1;
    }
    if ((a.kind == K::L || a.kind == K::Lbar) && b.kind == K::C) {
        Constraint ca = line_constraints(a);
        if (ca.count(b.i)) return 0;  // line pins coordinate b.i to a sqrt value, not +-i/2
        // product of the two constrained values is (e1 e2) * sqrt(alpha alphabar)
        int sign = 1;
        for (auto& [idx, val] : ca) sign *= val.second;
        return sign == b.d ? 1 : 0;
    }
    if (a.kind == K::C && b.kind == K::C) {
        if (a.i == b.i) {
            if (a.e == b.e) return 2;  // two halves of the same fiber (distinct d)
            return 0;                  // different fibers of pi_i
        }
        // distinct indices: the forced third coordinates agree iff d*e == d'*e'
        return a.d * a.e == b.d * b.e ? 1 : 0;
    }
    throw std::logic_error("geometric_pairing: unhandled kinds");
}

// ---------------------------------------------------------------------------

static std::vector<DivisorLabel> paper_basis() {
    using K = DivisorLabel::Kind;
    auto L = [](int i, int j, int e, int d) { return DivisorLabel{K::L, i, j, e, d}; };
    auto Lb = [](int i, int j, int e, int d) { return DivisorLabel{K::Lbar, i, j, e, d}; };
    return {{K::D, 1},       {K::D, 2},        {K::D, 3},        L(1, 2, 1, 1),  L(1, 2, 1, -1),
            L(1, 3, 1, 1),   L(2, 3, 1, 1),    L(1, 2, -1, 1),   L(1, 3, -1, 1), L(2, 3, -1, -1),
            Lb(1, 2, 1, 1),  Lb(1, 2, 1, -1),  Lb(1, 3, 1, 1),   Lb(2, 3, 1, 1), Lb(1, 2, -1, 1),
            Lb(1, 3, -1, 1), {K::C, 1, 2, 1, -1}, {K::C, 2, 2, 1, -1}};
}

std::vector<DivisorLabel> alternative_basis() {
    using K = DivisorLabel::Kind;
    auto L = [](int i, int j, int e, int d) { return DivisorLabel{K::L, i, j, e, d}; };
    auto Lb = [](int i, int j, int e, int d) { return DivisorLabel{K::Lbar, i, j, e, d}; };
    return {{K::D, 1},        L(2, 3, 1, 1),
            L(1, 2, 1, 1),    L(1, 2, 1, -1),  L(1, 3, 1, -1),  L(1, 2, -1, -1), L(1, 2, -1, 1),
            L(1, 3, -1, -1),  Lb(1, 2, 1, 1),  Lb(1, 2, 1, -1), Lb(1, 3, 1, -1), Lb(1, 2, -1, -1),
            Lb(1, 2, -1, 1),  Lb(1, 3, -1, -1), Lb(2, 3, 1, 1), L(2, 3, 1, -1),
            {K::C, 2, 2, 1, -1}, {K::C, 3, 2, 1, -1}};
}

const PicardLattice& build_lattice() {
    static const PicardLattice L = [] {
        PicardLattice lat;
        lat.basis = paper_basis();
        size_t n = lat.basis.size();
        lat.gram.assign(n, IntVec(n, 0));
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) lat.gram[a][b] = geometric_pairing(lat.basis[a], lat.basis[b]);
        if (mat_det(lat.gram) != -48)
            throw std::logic_error("Picard lattice self-check failed: det != -48");
        for (auto& lab : divisor_catalogue()) {
            IntVec rhs(n);
            for (size_t b = 0; b < n; ++b) rhs[b] = geometric_pairing(lab, lat.basis[b]);
            IntVec v = solve_exact(lat.gram, rhs);
            // classes pair against themselves with -2 (lines, C) or 0 (fibers): verify
            Int self = 0;
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) self += v[a] * lat.gram[a][b] * v[b];
            Int expect = (lab.kind == DivisorLabel::Kind::D || lab.kind == DivisorLabel::Kind::A ||
                          lab.kind == DivisorLabel::Kind::B)
                             ? 0
                             : -2;
            if (self != expect) throw std::logic_error("relation self-intersection check failed: " + lab.str());
            lat.relations.emplace(lab, v);
        }
        return lat;
    }();
    return L;
}

IntVec expand(const PicardLattice& L, const DivisorLabel& label) {
    auto it = L.relations.find(label);
    if (it == L.relations.end()) throw unknown_label("unknown divisor label: " + label.str());
    return it->second;
}

bool involution_isometry_check() {
    IntMat form = {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}};
    std::vector<IntMat> invs = {
        {{-1, 0, 0}, {2, 1, 0}, {2, 0, 1}},
        {{1, 2, 0}, {0, -1, 0}, {0, 2, 1}},
        {{1, 0, 2}, {0, 1, 2}, {0, 0, -1}},
    };
    for (auto& M : invs) {
        if (!mat_eq(mat_mul(mat_transpose(M), mat_mul(form, M)), form)) return false;
        if (!mat_eq(mat_mul(M, M), mat_identity(3))) return false;
    }
    return true;
}

QuotientDescription quotient_by_fibers(const PicardLattice& L) {
    size_t n = L.basis.size();
    IntMat incl(n, IntVec(3, 0));
    for (int c = 0; c < 3; ++c) {
        IntVec v = expand(L, {DivisorLabel::Kind::D, c + 1});
        for (size_t r = 0; r < n; ++r) incl[r][c] = v[r];
    }
    auto divs = smith_invariant_factors(incl);
    QuotientDescription q;
    q.rank = (int)n - (int)divs.size();
    for (auto& d : divs)
        if (d != 1) q.torsion.push_back(d);
    return q;
}

// ---------------------------------------------------------------------------
// Galois action: sigma(sa)=sb, sigma(sb)=-sa; tau(sa)=sa, tau(sb)=-sb;
// rho fixes sa,sb and conjugates i. c = sa*sb, so sigma(c)=tau(c)=-c, rho(c)=c.
// ---------------------------------------------------------------------------

namespace {

enum class Gen { sigma, tau, rho };

std::pair<int, int> act_symbol(Gen g, int sym, int sign) {  // sym: 0=sa, 1=sb
    switch (g) {
        case Gen::sigma: return sym == 0 ? std::pair{1, sign} : std::pair{0, -sign};
        case Gen::tau: return sym == 0 ? std::pair{0, sign} : std::pair{1, -sign};
        case Gen::rho: return {sym, sign};
    }
    throw std::logic_error("act_symbol");
}

int i_sign(Gen g) { return g == Gen::rho ? -1 : 1; }
int c_sign(Gen g) {
    auto a = act_symbol(g, 0, 1), b = act_symbol(g, 1, 1);
    return a.second * b.second;
}

DivisorLabel act_label(Gen g, const DivisorLabel& l) {
    using K = DivisorLabel::Kind;
    switch (l.kind) {
        case K::D:
        case K::A:
        case K::B: return l;
        case K::L:
        case K::Lbar: {
            int sym_i = l.kind == K::L ? 0 : 1;
            int sym_j = 1 - sym_i;
            auto ni = act_symbol(g, sym_i, l.e);
            auto nj = act_symbol(g, sym_j, l.d);
            if (ni.first == 0) return {K::L, l.i, l.j, ni.second, nj.second};
            return {K::Lbar, l.i, l.j, ni.second, nj.second};
        }
        case K::C: return {K::C, l.i, 2, l.e * i_sign(g), l.d * c_sign(g)};
    }
    throw std::logic_error("act_label");
}

IntMat matrix_of(Gen g) {
    const PicardLattice& L = build_lattice();
    size_t n = L.basis.size();
    IntMat M(n, IntVec(n, 0));
    for (size_t j = 0; j < n; ++j) {
        IntVec col = expand(L, act_label(g, L.basis[j]));
        for (size_t i = 0; i < n; ++i) M[i][j] = col[i];
    }
    return M;
}

}  // namespace

const GroupAction& galois_action() {
    static const GroupAction A = [] {
        GroupAction a;
        a.sigma = matrix_of(Gen::sigma);
        a.tau = matrix_of(Gen::tau);
        a.rho = matrix_of(Gen::rho);
        return a;
    }();
    return A;
}

bool action_is_isometry(const GroupAction& A, const IntMat& gram) {
    for (auto* M : {&A.sigma, &A.tau, &A.rho})
        if (!mat_eq(mat_mul(mat_transpose(*M), mat_mul(gram, *M)), gram)) return false;
    return true;
}

bool action_satisfies_presentation(const GroupAction& A) {
    size_t n = A.sigma.size();
    IntMat I = mat_identity(n);
    IntMat s2 = mat_mul(A.sigma, A.sigma);
    if (!mat_eq(mat_mul(s2, s2), I)) return false;
    if (!mat_eq(mat_mul(A.tau, A.tau), I)) return false;
    if (!mat_eq(mat_mul(A.rho, A.rho), I)) return false;
    // tau sigma tau^-1 = sigma^-1  (tau an involution)
    IntMat lhs = mat_mul(A.tau, mat_mul(A.sigma, A.tau));
    IntMat sinv = mat_mul(s2, A.sigma);
    if (!mat_eq(lhs, sinv)) return false;
    if (!mat_eq(mat_mul(A.rho, A.sigma), mat_mul(A.sigma, A.rho))) return false;
    if (!mat_eq(mat_mul(A.rho, A.tau), mat_mul(A.tau, A.rho))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// cohomology
// ---------------------------------------------------------------------------

CohomologyResult h1_cyclic(const IntMat& g, int order) {
    size_t n = g.size();
    IntMat I = mat_identity(n);
    IntMat P = I, norm(n, IntVec(n, 0));
    for (int t = 0; t < order; ++t) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) norm[i][j] += P[i][j];
        P = mat_mul(P, g);
    }
    if (!mat_eq(P, I)) throw std::invalid_argument("h1_cyclic: g^order != identity");
    auto K = kernel_basis(norm);
    CohomologyResult res;
    if (K.empty()) return res;
    size_t r = K.size();
    IntMat Kt(n, IntVec(r));
    for (size_t b = 0; b < r; ++b)
        for (size_t i = 0; i < n; ++i) Kt[i][b] = K[b][i];
    IntMat oneminus(n, IntVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) oneminus[i][j] = (i == j ? 1 : 0) - g[i][j];
    IntMat X = solve_exact_mat(Kt, oneminus);  // r x n
    auto divs = smith_invariant_factors(X);
    for (auto& d : divs)
        if (d > 1) res.invariant_factors.push_back(d);
    res.free_rank = (int)r - (int)divs.size();
    return res;
}

namespace {

const std::vector<std::vector<Gen>>& group_relations() {
    static const std::vector<std::vector<Gen>> R = {
        {Gen::sigma, Gen::sigma, Gen::sigma, Gen::sigma},
        {Gen::tau, Gen::tau},
        {Gen::rho, Gen::rho},
        {Gen::tau, Gen::sigma, Gen::tau, Gen::sigma},
        {Gen::rho, Gen::sigma, Gen::rho, Gen::sigma, Gen::sigma, Gen::sigma},
        {Gen::rho, Gen::tau, Gen::rho, Gen::tau}};
    return R;
}

}  // namespace

CohomologyResult h1_group(const GroupAction& A) {
    const std::map<Gen, const IntMat*> gens = {
        {Gen::sigma, &A.sigma}, {Gen::tau, &A.tau}, {Gen::rho, &A.rho}};
    size_t n = A.sigma.size();
    size_t vars = 3 * n;  // (c_sigma, c_tau, c_rho)
    IntMat rows;
    IntMat I = mat_identity(n);
    for (auto& word : group_relations()) {
        std::vector<IntMat> blocks(3, IntMat(n, IntVec(n, 0)));
        IntMat P = I;
        for (Gen g : word) {
            size_t bi = g == Gen::sigma ? 0 : g == Gen::tau ? 1 : 2;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) blocks[bi][i][j] += P[i][j];
            P = mat_mul(P, *gens.at(g));
        }
        if (!mat_eq(P, I)) throw std::invalid_argument("h1_group: relation fails on the module");
        for (size_t i = 0; i < n; ++i) {
            IntVec row(vars, 0);
            for (size_t b = 0; b < 3; ++b)
                for (size_t j = 0; j < n; ++j) row[b * n + j] = blocks[b][i][j];
            rows.push_back(row);
        }
    }
    auto K = kernel_basis(rows);
    CohomologyResult res;
    if (K.empty()) return res;
    size_t r = K.size();
    IntMat Kt(vars, IntVec(r));
    for (size_t b = 0; b < r; ++b)
        for (size_t i = 0; i < vars; ++i) Kt[i][b] = K[b][i];
    IntMat cob(vars, IntVec(n, 0));
    size_t bi = 0;
    for (Gen g : {Gen::sigma, Gen::tau, Gen::rho}) {
        const IntMat& M = *gens.at(g);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) cob[bi * n + i][j] = M[i][j] - (i == j ? 1 : 0);
        ++bi;
    }
    IntMat X = solve_exact_mat(Kt, cob);
    auto divs = smith_invariant_factors(X);
    for (auto& d : divs)
        if (d > 1) res.invariant_factors.push_back(d);
    res.free_rank = (int)r - (int)divs.size();
    return res;
}

IntMat quotient_matrix(const IntMat& g) {
    size_t n = g.size();
    IntMat q(n - 3, IntVec(n - 3));
    for (size_t i = 3; i < n; ++i)
        for (size_t j = 3; j < n; ++j) q[i - 3][j - 3] = g[i][j];
    return q;
}

GroupAction quotient_action(const GroupAction& A) {
    return {quotient_matrix(A.sigma), quotient_matrix(A.tau), quotient_matrix(A.rho)};
}

IntMat restrict_to_submodule(const IntMat& g, const std::vector<IntVec>& subbasis) {
    size_t n = g.size(), r = subbasis.size();
    IntMat Kt(n, IntVec(r));
    for (size_t b = 0; b < r; ++b)
        for (size_t i = 0; i < n; ++i) Kt[i][b] = subbasis[b][i];
    IntMat images(n, IntVec(r));
    for (size_t b = 0; b < r; ++b) {
        IntVec img = mat_apply(g, subbasis[b]);
        for (size_t i = 0; i < n; ++i) images[i][b] = img[i];
    }
    return solve_exact_mat(Kt, images);
}

std::vector<IntVec> fixed_sublattice(const IntMat& g) {
    size_t n = g.size();
    IntMat m(n, IntVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = g[i][j] - (i == j ? 1 : 0);
    return kernel_basis(m);
}

// ---------------------------------------------------------------------------
// half-sum enumeration with incremental parity pruning
// ---------------------------------------------------------------------------

std::vector<HalfSumCandidate> sublattice_index_check(const PicardLattice& L) {
    size_t n = L.basis.size();
    // row r's parity constraint is decided once every odd-entry column is assigned
    std::vector<int> last_odd(n, -1);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            if (L.gram[r][c] % 2 != 0) last_odd[r] = (int)c;
    std::vector<HalfSumCandidate> out;
    std::vector<int> bits(n, 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        // check every row whose constraint set just completed
        for (size_t r = 0; r < n; ++r) {
            if (last_odd[r] != (int)pos - 1) continue;
            long long parity = 0;
            for (size_t c = 0; c < pos; ++c)
                if (L.gram[r][c] % 2 != 0 && bits[c]) parity ^= 1;
            if (parity) return;  // half-integral pairing against basis row r
        }
        if (pos == n) {
            if (std::all_of(bits.begin(), bits.end(), [](int b) { return b == 0; })) return;
            HalfSumCandidate cand;
            cand.bits = bits;
            Int s = 0;
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    if (bits[a] && bits[b]) s += L.gram[a][b];
            cand.self_intersection = Rat(s, 4);
            if (cand.self_intersection.denominator() != 1 ||
                cand.self_intersection.numerator() % 2 != 0)
                cand.verdict = "excluded: odd or non-integral self-intersection";
            else
                cand.verdict = "excluded per Nikulin (paper prose)";
            out.push_back(cand);
            return;
        }
        bits[pos] = 0;
        rec(pos + 1);
        bits[pos] = 1;
        rec(pos + 1);
        bits[pos] = 0;
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// verification against the paper displays
// ---------------------------------------------------------------------------

namespace {

const int PAPER_GRAM[18][18] = {
    {0, 2, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
    {2, 0, 2, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0},
    {2, 2, 0, 1, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1},
    {0, 0, 1, -2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 1, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 1, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 1, -2, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, -2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 1, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, -2, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, -2, 1, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -2, 1, 0, 0, 0, 0},
    {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, -2, 0, 1, 0, 0},
    {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -2, 1, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -2, 0, 1},
    {0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 1},
    {1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, -2}};

struct PaperRow {
    const char* label;
    int row[18];
};
const PaperRow PAPER_RELATIONS[11] = {
    {"lb12^--", {0, 1, -1, 0, 0, 1, 1, 0, 1, -1, 0, -1, 0, 0, 0, 0, 0, 0}},
    {"l12^--", {2, 1, -1, -1, -1, -1, -1, -1, -1, 1, -1, 0, 0, 0, -1, 0, 0, 0}},
    {"lb23^--", {-2, 0, 0, 1, 0, 1, 1, 1, 1, -1, 1, 0, 1, 1, 1, 1, 0, 0}},
    {"l13^--", {-1, -1, 1, 1, 1, 1, 1, 0, 0, -1, 1, 0, 0, 0, 1, 0, 0, 0}},
    {"lb13^--", {1, -1, 1, 0, 0, -1, -1, 0, -1, 1, 0, 1, 0, 0, -1, -1, 0, 0}},
    {"l13^+-", {1, 0, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"lb13^+-", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0, 0, 0}},
    {"l23^+-", {0, 1, 0, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0}},
    {"lb23^+-", {0, 1, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0}},
    {"l23^-+", {0, 0, 1, 0, 0, -1, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"lb23^-+", {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, -1, 0, 0}}};

const int PAPER_SIGMA_BLOCK[16][16] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, -1, 0, 0, 0, 0},
    {0, 1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
    {0, 1, -1, 0, 0, 0, 0, -1, 0, 1, 1, 0, 0, 1, -1, 0},
    {1, -1, 1, 0, 0, 0, 0, 1, -1, -1, -1, 0, -1, -1, 1, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, -1},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 1, -1, -1, -1, -1, -1, 0, -1, -1, -1, 0, 0, -1, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, -1, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}};

bool same_saturated_span(const std::vector<IntVec>& a, const std::vector<IntVec>& b, size_t dim) {
    // compare the saturations via mutual containment of kernels complement: here both
    // families are small; check each vector of one lies in the span of the other (over Z)
    auto contains = [&](const std::vector<IntVec>& gens, const IntVec& v) {
        if (gens.empty()) return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
        IntMat A(dim, IntVec(gens.size()));
        for (size_t c = 0; c < gens.size(); ++c)
            for (size_t r = 0; r < dim; ++r) A[r][c] = gens[c][r];
        try {
            solve_exact(A, v);
            return true;
        } catch (const std::invalid_argument&) {
            return false;
        }
    };
    for (auto& v : a)
        if (!contains(b, v)) return false;
    for (auto& v : b)
        if (!contains(a, v)) return false;
    return true;
}

}  // namespace

LatticeReport lattice_verify() {
    LatticeReport rep;
    const PicardLattice& L = build_lattice();
    size_t n = L.basis.size();

    rep.gram_matches_display = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (L.gram[i][j] != PAPER_GRAM[i][j]) rep.gram_matches_display = false;
    if (!rep.gram_matches_display)
        rep.discrepancies.push_back("geometric Gram differs from the displayed intersection matrix");

    rep.det = mat_det(L.gram);
    rep.inertia = symmetric_inertia(L.gram);
    rep.even = true;
    for (size_t i = 0; i < n; ++i)
        if (L.gram[i][i] % 2 != 0) rep.even = false;

    auto alt = alternative_basis();
    IntMat altg(n, IntVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) altg[i][j] = geometric_pairing(alt[i], alt[j]);
    rep.alt_det = mat_det(altg);

    rep.relations_match_display = true;
    for (auto& pr : PAPER_RELATIONS) {
        IntVec v = expand(L, parse_label(pr.label));
        for (size_t i = 0; i < n; ++i)
            if (v[i] != pr.row[i]) rep.relations_match_display = false;
    }
    if (!rep.relations_match_display)
        rep.discrepancies.push_back("relation table differs from the displayed 11-row matrix");

    using K = DivisorLabel::Kind;
    rep.c_plus_relations_hold = true;
    for (int i = 1; i <= 3; ++i) {
        IntVec plus = expand(L, {K::C, i, 2, 1, 1});
        IntVec minus = expand(L, {K::C, i, 2, 1, -1});
        IntVec di = expand(L, {K::D, i});
        for (size_t t = 0; t < n; ++t)
            if (plus[t] + minus[t] != di[t]) rep.c_plus_relations_hold = false;
    }
    {
        IntVec a = expand(L, {K::C, 1, 2, -1, -1});
        IntVec b = expand(L, {K::C, 1, 2, 1, -1});
        rep.c_minus_collapse_holds = (a == b);
        if (!rep.c_minus_collapse_holds)
            rep.discrepancies.push_back(
                "displayed relation C1^{--} = C1^{+-} fails: the reconstructed classes differ "
                "(their pairings against C2^{+-} are 0 and 1)");
    }

    const GroupAction& A = galois_action();
    rep.action_isometry = action_is_isometry(A, L.gram);
    rep.action_presentation = action_satisfies_presentation(A);

    rep.sigma_block_matches_display = true;
    bool tr_match = true;
    for (size_t i = 0; i < 16; ++i)
        for (size_t j = 0; j < 16; ++j) {
            if (A.sigma[i][j] != PAPER_SIGMA_BLOCK[i][j]) rep.sigma_block_matches_display = false;
            if (A.sigma[j][i] != PAPER_SIGMA_BLOCK[i][j]) tr_match = false;
        }
    if (!rep.sigma_block_matches_display && tr_match) rep.sigma_block_matches_display = true;
    if (!rep.sigma_block_matches_display)
        rep.discrepancies.push_back(
            "displayed 16x16 sigma block does not equal the reconstructed action in either "
            "row- or column-image convention (it is not even a Gram isometry)");

    // Ker(1+rho) vs the claimed generators
    {
        IntMat oneplus(n, IntVec(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) oneplus[i][j] = A.rho[i][j] + (i == j ? 1 : 0);
        auto ker = kernel_basis(oneplus);
        std::vector<IntVec> claimed;
        for (int i = 1; i <= 2; ++i) {
            IntVec a = expand(L, {K::C, i, 2, 1, -1});
            IntVec b = expand(L, {K::C, i, 2, -1, -1});
            IntVec d(n);
            for (size_t t = 0; t < n; ++t) d[t] = a[t] - b[t];
            claimed.push_back(d);
        }
        rep.rho_kernel_matches_claim = same_saturated_span(ker, claimed, n);
        if (!rep.rho_kernel_matches_claim)
            rep.discrepancies.push_back("Ker(1+rho) does not match the claimed generators");
    }

    rep.h1_picW = h1_group(A);
    rep.h1_picU = h1_group(quotient_action(A));
    rep.h1_rho_W = h1_cyclic(A.rho, 2);
    rep.h1_rho_U = h1_cyclic(quotient_matrix(A.rho), 2);
    {
        auto fixW = fixed_sublattice(A.rho);
        rep.h1_sigma_Wrho = h1_cyclic(restrict_to_submodule(A.sigma, fixW), 4);
        auto qA = quotient_action(A);
        auto fixU = fixed_sublattice(qA.rho);
        rep.h1_sigma_Urho = h1_cyclic(restrict_to_submodule(qA.sigma, fixU), 4);
    }
    rep.fiber_quotient = quotient_by_fibers(L);
    rep.half_sums = sublattice_index_check(L);
    return rep;
}

}  // namespace mk3
