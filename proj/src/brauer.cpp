#include "brauer.hpp"

#include <algorithm>
#include <cassert>

namespace mk3 {

std::string Representation::str() const {
    const char* v = "xyz";
    switch (form) {
        case SlotForm::coord_sq_plus: return std::string("4") + v[i] + "^2+1";
        case SlotForm::coord_sq_minus: return std::string("4") + v[i] + "^2-1";
        case SlotForm::pair_sq_minus: return std::string("4") + v[i] + "^2" + v[j] + "^2-1";
        case SlotForm::b_form:
            return std::string("16") + v[i] + "^2" + v[j] + "^2-4" + v[i] + "^2-4" + v[j] + "^2-1";
    }
    return "?";
}

std::vector<QuaternionClass> obstruction_classes(ProfileId prof, const Int& k) {
    switch (prof) {
        case ProfileId::thm44:
        case ProfileId::assumption1:
            return {{FamilyId::F1,
                     "A",
                     {{SlotForm::pair_sq_minus, 0, 1},
                      {SlotForm::pair_sq_minus, 1, 2},
                      {SlotForm::pair_sq_minus, 2, 0}},
                     k + 1,
                     IdentityId::adjacent_product}};
        case ProfileId::thm45:
        case ProfileId::assumption2:
            return {{FamilyId::F2, "A1", {{SlotForm::coord_sq_minus, 0}}, k, IdentityId::triple_product_minus},
                    {FamilyId::F2, "A2", {{SlotForm::coord_sq_minus, 1}}, k, IdentityId::triple_product_minus}};
        case ProfileId::thm46:
        case ProfileId::assumption3:
            return {{FamilyId::F3, "A1", {{SlotForm::coord_sq_plus, 0}}, -2 * (4 * k + 1),
                     IdentityId::triple_product_plus},
                    {FamilyId::F3, "A2", {{SlotForm::coord_sq_plus, 1}}, -2 * (4 * k + 1),
                     IdentityId::triple_product_plus}};
        case ProfileId::prop51:
        case ProfileId::prop52:
            return {{FamilyId::F3, "A1", {{SlotForm::coord_sq_plus, 0}}, 2 * (4 * k + 1),
                     IdentityId::triple_product_plus},
                    {FamilyId::F3, "A2", {{SlotForm::coord_sq_plus, 1}}, 2 * (4 * k + 1),
                     IdentityId::triple_product_plus}};
    }
    throw std::invalid_argument("obstruction_classes: unsupported profile");
}

QuaternionClass b_membership_class(const Int& k) {
    return {FamilyId::F3,
            "B",
            {{SlotForm::b_form, 0, 1}, {SlotForm::b_form, 0, 2}},
            (4 * k - 5) * (4 * k - 5) - 32,
            IdentityId::b_class_product};
}

QuaternionClass third_coordinate_class(ProfileId prof, const Int& k) {
    if (prof == ProfileId::thm44 || prof == ProfileId::assumption1)
        throw std::invalid_argument("third_coordinate_class: F2/F3 profiles only");
    auto cs = obstruction_classes(prof, k);
    QuaternionClass c = cs[0];
    c.label = "A3";
    for (auto& r : c.reps) r.i = 2;
    return c;
}

PadicApprox QuaternionClass::slot_value(const Representation& r, const std::array<PadicApprox, 3>& P) const {
    const Int& p = P[0].prime();
    int prec = 6;
    for (auto& c : P)
        if (c.kind() == PadicApprox::Kind::approx) prec = std::max(prec, c.precision() + 4);
    auto C = [&](long long v) { return PadicApprox::from_rational(Rat(v), p, prec); };
    switch (r.form) {
        case SlotForm::coord_sq_plus: return C(4) * P[r.i] * P[r.i] + C(1);
        case SlotForm::coord_sq_minus: return C(4) * P[r.i] * P[r.i] - C(1);
        case SlotForm::pair_sq_minus: return C(4) * P[r.i] * P[r.i] * P[r.j] * P[r.j] - C(1);
        case SlotForm::b_form: {
            PadicApprox a2 = P[r.i] * P[r.i], b2 = P[r.j] * P[r.j];
            return C(16) * a2 * b2 - C(4) * a2 - C(4) * b2 - C(1);
        }
    }
    throw std::logic_error("slot_value");
}

HalfInvariant local_invariant(const QuaternionClass& c, const Surface& s,
                              const std::array<PadicApprox, 3>& P, const Place& v) {
    if (v.is_real()) throw std::invalid_argument("local_invariant: use real_invariant_scan at the real place");
    const Int& p = v.p();
    int max_extra = 0;
    for (auto& r : c.reps) {
        try {
            PadicApprox slot = c.slot_value(r, P);
            return hilbert_symbol_padic(slot, Rat(c.constant), p);
        } catch (const precision_error& e) {
            max_extra = std::max(max_extra, e.extra_depth);
        }
    }
    throw precision_error("no representation determinable; deepen the witness", std::max(1, max_extra));
}

// ---------------------------------------------------------------------------
// residue scanning
// ---------------------------------------------------------------------------

namespace {

struct ClassLocal {
    long long vC = 0;
    int unitC_mod8 = 1;   // p = 2
    int nonsqC = 0;       // odd p: 1 if unit class nonsquare
    bool zero_cert = false;       // odd p, v(C) even, unit square: invariant constantly 0
    bool minus_one_nonsq = false; // odd p: -1 not a QR (plus-forms cannot vanish)
    bool all_plus_forms = false;
};

ClassLocal class_local(const QuaternionClass& c, long long p) {
    ClassLocal cl;
    Int C = c.constant;
    if (C == 0) throw std::invalid_argument("class constant is zero");
    cl.vC = valuation_int(C, p);
    Int pk = 1;
    for (long long i = 0; i < cl.vC; ++i) pk *= p;
    Int unit = C / pk;
    if (p == 2) {
        Int m = unit % 8;
        if (m < 0) m += 8;
        cl.unitC_mod8 = (int)m.convert_to<long long>();
    } else {
        cl.nonsqC = legendre(unit, Int(p)) == 1 ? 0 : 1;
        cl.zero_cert = (cl.vC % 2 == 0) && cl.nonsqC == 0;
        cl.minus_one_nonsq = legendre(Int(-1), Int(p)) != 1;
    }
    cl.all_plus_forms = std::all_of(c.reps.begin(), c.reps.end(), [](const Representation& r) {
        return r.form == SlotForm::coord_sq_plus;
    });
    return cl;
}

int eps2_small(int u) { return (u % 8 == 1 || u % 8 == 5) ? 0 : 1; }
int omega2_small(int u) { return (u % 8 == 1 || u % 8 == 7) ? 0 : 1; }

struct Scanner {
    Surface s;
    std::vector<QuaternionClass> classes;
    long long p;
    int cap;
    std::array<int, 3> shifts{0, 0, 0};
    const PolySystemMod* F = nullptr;
    std::vector<ClassLocal> cl;
    std::vector<char> sqtab;
    PlaceScan out;
    long long nodes_budget = 120000000;
    std::vector<u64> pmpow;  // p^i
    // branches cut at the cap: per class the determined invariant or -1. The scan is
    // still exact if every completion of every pending branch is already attained.
    std::vector<std::vector<int>> pending;
    bool budget_hit = false;

    void init() {
        for (auto& c : classes) cl.push_back(class_local(c, p));
        if (p != 2) {
            sqtab.assign((size_t)p, 0);
            for (long long i = 0; i < p; ++i) sqtab[(size_t)((u128)i * i % p)] = 1;
        }
        pmpow.resize(cap + 2);
        pmpow[0] = 1;
        for (int i = 1; i <= cap + 1; ++i) pmpow[i] = pmpow[i - 1] * (u64)p;
    }

    // slot numerator mod p^m and the denominator exponent
    std::pair<u64, int> slot_num(const Representation& r, const std::array<u64, 3>& pt, int m) const {
        u64 pm = pmpow[m];
        auto ppow = [&](int e) -> u64 { return e >= m ? 0 : pmpow[e]; };
        u64 a2 = mulmod(pt[r.i], pt[r.i], pm);
        switch (r.form) {
            case SlotForm::coord_sq_plus:
                return {addmod(mulmod(4 % pm, a2, pm), ppow(2 * shifts[r.i]), pm), 2 * shifts[r.i]};
            case SlotForm::coord_sq_minus:
                return {submod(mulmod(4 % pm, a2, pm), ppow(2 * shifts[r.i]), pm), 2 * shifts[r.i]};
            case SlotForm::pair_sq_minus: {
                u64 b2 = mulmod(pt[r.j], pt[r.j], pm);
                int den = 2 * (shifts[r.i] + shifts[r.j]);
                return {submod(mulmod(4 % pm, mulmod(a2, b2, pm), pm), ppow(den), pm), den};
            }
            case SlotForm::b_form: {
                u64 b2 = mulmod(pt[r.j], pt[r.j], pm);
                int den = 2 * (shifts[r.i] + shifts[r.j]);
                u64 v = mulmod(16 % pm, mulmod(a2, b2, pm), pm);
                v = submod(v, mulmod(mulmod(4 % pm, a2, pm), ppow(2 * shifts[r.j]), pm), pm);
                v = submod(v, mulmod(mulmod(4 % pm, b2, pm), ppow(2 * shifts[r.i]), pm), pm);
                v = submod(v, ppow(den), pm);
                return {v, den};
            }
        }
        throw std::logic_error("slot_num");
    }

    int halves(long long alpha, int funit_small, const ClassLocal& c) const {
        int a2 = (int)(((alpha % 2) + 2) % 2);
        int b2 = (int)(((c.vC % 2) + 2) % 2);
        if (p == 2) {
            int h = eps2_small(funit_small) * eps2_small(c.unitC_mod8) + a2 * omega2_small(c.unitC_mod8) +
                    b2 * omega2_small(funit_small);
            return h % 2;
        }
        int epsp = (int)(((p - 1) / 2) % 2);
        int nf = sqtab[(size_t)(funit_small % p)] ? 0 : 1;
        return (a2 * b2 * epsp + b2 * nf + a2 * c.nonsqC) % 2;
    }

    // invariant of class ci at the residue point, or -1 if undetermined at depth m
    int class_invariant(size_t ci, const std::array<u64, 3>& pt, int m) {
        const QuaternionClass& c = classes[ci];
        const ClassLocal& L = cl[ci];
        int need = p == 2 ? 3 : 1;
        for (auto& r : c.reps) {
            auto [num, den] = slot_num(r, pt, m);
            if (num == 0) continue;
            long long v = val_u64(num, (u64)p);
            if (m - v < need) continue;
            u64 unit = num / pmpow[v];
            int usm = p == 2 ? (int)(unit % 8) : (int)(unit % (u64)p);
            return halves(v - den, usm, L);
        }
        // every representation vanishes to depth m
        if (p != 2 && L.vC == 0 && L.nonsqC == 0) {
            // divides-implies-square, certified by the class identity: any point with
            // p | slot forces the constant into Z_p^x2, and it is one, so the symbol is 0
            return 0;
        }
        if (L.zero_cert) return 0;
        // nonsquare unit constant: the identity rules such points out entirely; the
        // residue branch is refined (and dies) rather than guessed at
        return -1;
    }

    void process(const std::array<u64, 3>& pt, int m) {
        if (budget_hit) return;
        if (++out.nodes > nodes_budget) {
            budget_hit = true;
            out.stable = false;
            if (out.note.empty()) out.note = "node budget exceeded";
            return;
        }
        u64 pm = pmpow[m];
        if (F->eval(pt[0], pt[1], pt[2], pm) != 0) return;
        auto g = F->grad(pt[0], pt[1], pt[2], pm);
        long long e = m;
        for (int i = 0; i < 3; ++i) {
            long long v = g[i] == 0 ? m : val_u64(g[i], (u64)p);
            e = std::min(e, v);
        }
        std::vector<int> partial(classes.size(), -1);
        bool all = true;
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            partial[ci] = class_invariant(ci, pt, m);
            if (partial[ci] < 0) all = false;
        }
        if (m > 2 * e && all) {
            InvariantVector vec(partial.begin(), partial.end());
            if (!out.vectors.count(vec)) {
                out.vectors.insert(vec);
                ScanWitness w;
                w.shifts = shifts;
                w.residues = pt;
                w.modexp = m;
                out.examples.emplace(vec, w);
            }
            return;
        }
        if (m >= cap) {
            pending.push_back(partial);
            return;
        }
        u64 step = pm;
        for (u64 a = 0; a < (u64)p; ++a)
            for (u64 b = 0; b < (u64)p; ++b)
                for (u64 c = 0; c < (u64)p; ++c)
                    process({pt[0] + a * step, pt[1] + b * step, pt[2] + c * step}, m + 1);
    }

    void finalize() {
        // a pending branch is harmless when every vector it could still contribute
        // is already witnessed
        for (auto& part : pending) {
            std::vector<InvariantVector> completions{{}};
            for (int h : part) {
                std::vector<InvariantVector> next;
                for (auto& v : completions) {
                    if (h >= 0) {
                        auto w = v;
                        w.push_back(h);
                        next.push_back(w);
                    } else {
                        for (int b = 0; b < 2; ++b) {
                            auto w = v;
                            w.push_back(b);
                            next.push_back(w);
                        }
                    }
                }
                completions = next;
            }
            for (auto& v : completions)
                if (!out.vectors.count(v)) {
                    out.stable = false;
                    if (out.note.empty())
                        out.note = "undetermined residue branch at the depth cap";
                    return;
                }
        }
    }

    void run(int base_depth, bool units_at_shifted) {
        u64 pd = pmpow[base_depth];
        for (u64 x = 0; x < pd; ++x) {
            if (units_at_shifted && shifts[0] > 0 && x % (u64)p == 0) continue;
            for (u64 y = 0; y < pd; ++y) {
                if (units_at_shifted && shifts[1] > 0 && y % (u64)p == 0) continue;
                for (u64 z = 0; z < pd; ++z) {
                    if (units_at_shifted && shifts[2] > 0 && z % (u64)p == 0) continue;
                    process({x, y, z}, base_depth);
                }
            }
        }
        finalize();
    }
};

}  // namespace

PlaceScan scan_invariant_vectors(const Surface& s, const std::vector<QuaternionClass>& classes,
                                 long long p, int depth) {
    Scanner sc;
    sc.s = s;
    sc.classes = classes;
    sc.p = p;
    sc.cap = depth;
    SurfaceMod F(s);
    sc.F = &F;
    sc.init();
    sc.out.place = std::to_string(p);
    sc.out.cap = depth;
    int base = std::min(depth, p == 2 ? 3 : 1);
    sc.run(base, false);
    return sc.out;
}

PlaceScan scan_invariant_vectors_rational(const Surface& s, const std::vector<QuaternionClass>& classes,
                                          long long p, int depth, int max_neg) {
    PlaceScan merged;
    merged.place = std::to_string(p) + " (Q_p)";
    merged.cap = depth;
    for (int sx = 0; sx <= max_neg; ++sx)
        for (int sy = 0; sy <= max_neg; ++sy)
            for (int sz = 0; sz <= max_neg; ++sz) {
                Scanner sc;
                sc.s = s;
                sc.classes = classes;
                sc.p = p;
                sc.cap = depth;
                sc.shifts = {sx, sy, sz};
                ScaledSurfaceMod F(s, p, {sx, sy, sz});
                sc.F = &F;
                sc.nodes_budget = 4000000;
                sc.init();
                int base = std::min(depth, p == 2 ? 3 : 1);
                sc.run(base, true);
                merged.nodes += sc.out.nodes;
                for (auto& v : sc.out.vectors) {
                    merged.vectors.insert(v);
                    merged.pattern_vectors.push_back({{sx, sy, sz}, v});
                    auto it = sc.out.examples.find(v);
                    if (it != sc.out.examples.end()) merged.examples.emplace(v, it->second);
                }
                // instability of deep negative patterns does not affect witness existence,
                // but record it so emptiness-style conclusions are never drawn from this scan
                if (!sc.out.stable) merged.stable = false;
            }
    return merged;
}

PlaceScan real_invariant_scan(const Surface& s, const std::vector<QuaternionClass>& classes) {
    PlaceScan out;
    out.place = "real";
    std::vector<std::set<int>> sets;
    for (auto& c : classes) {
        if (c.constant > 0) {
            sets.push_back({0});
            continue;
        }
        bool all_plus = std::all_of(c.reps.begin(), c.reps.end(), [](const Representation& r) {
            return r.form == SlotForm::coord_sq_plus;
        });
        if (all_plus) {
            sets.push_back({0});
            continue;
        }
        bool f1_pair = s.family == FamilyId::F1 && s.k < 0 &&
                       std::all_of(c.reps.begin(), c.reps.end(), [](const Representation& r) {
                           return r.form == SlotForm::pair_sq_minus;
                       });
        if (f1_pair) {
            // z^2 (4x^2y^2-1) = x^2+y^2-k > 0 on U_k(R) and z = 0 would force x^2+y^2 = k < 0,
            // so the slot is positive on every real point
            sets.push_back({0});
            out.note = "first slot positive on U_k(R) (k < 0)";
            continue;
        }
        sets.push_back({0, 1});
        out.overapprox = true;
    }
    // cartesian product
    std::vector<InvariantVector> acc{{}};
    for (auto& st : sets) {
        std::vector<InvariantVector> next;
        for (auto& v : acc)
            for (int h : st) {
                auto w = v;
                w.push_back(h);
                next.push_back(w);
            }
        acc = next;
    }
    for (auto& v : acc) out.vectors.insert(v);
    return out;
}

InvariantSet invariant_set(const QuaternionClass& c, const Surface& s, long long p, int depth) {
    auto scan = scan_invariant_vectors(s, {c}, p, depth);
    InvariantSet r;
    r.stable = scan.stable;
    for (auto& v : scan.vectors) r.values.insert(v[0]);
    return r;
}

// ---------------------------------------------------------------------------
// verdicts
// ---------------------------------------------------------------------------

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::obstructed: return "obstructed";
        case Verdict::not_obstructed_with_witness: return "not_obstructed_with_witness";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

TailCertificate tail_certify(const std::vector<QuaternionClass>& classes,
                             const std::set<long long>& scanned) {
    TailCertificate tc;
    tc.certified = true;
    for (auto& c : classes) {
        auto cert = factored_identity_symbolic(c.family, c.equivalence_id);
        if (!cert.holds) {
            tc.certified = false;
            tc.notes.push_back("identity " + identity_name(c.equivalence_id) + " failed symbolically");
            continue;
        }
        tc.notes.push_back("class " + c.label + ": primes not dividing 2*constant are trivial via " +
                           identity_name(c.equivalence_id) + " (slot divisible => constant is a square)");
        for (auto& [q, e] : factorize(c.constant < 0 ? -c.constant : c.constant)) {
            long long ql = q.convert_to<long long>();
            if (ql == 2 || scanned.count(ql)) continue;
            long long vq = e;
            Int unit = (c.constant < 0 ? -c.constant : c.constant);
            for (int i = 0; i < e; ++i) unit /= q;
            if (c.constant < 0) unit = -unit;
            bool even = vq % 2 == 0;
            bool unit_sq = legendre(unit, q) == 1;
            bool plus_fallback = false;
            if (!unit_sq) {
                // forms 4w^2+1 cannot vanish mod q when -1 is not a square, so v_q(slot)=0 always
                bool all_plus = std::all_of(c.reps.begin(), c.reps.end(), [](const Representation& r) {
                    return r.form == SlotForm::coord_sq_plus;
                });
                plus_fallback = all_plus && legendre(Int(-1), q) != 1;
            }
            if (even && (unit_sq || plus_fallback)) {
                tc.notes.push_back("class " + c.label + ": p=" + q.str() + " divides constant, v_p even, " +
                                   (unit_sq ? "unit square" : "slot form cannot vanish") + " => invariant 0");
            } else {
                tc.certified = false;
                tc.notes.push_back("class " + c.label + ": p=" + q.str() +
                                   " divides constant but is not zero-certified");
            }
        }
    }
    return tc;
}

bool find_zero_selection(const std::vector<const PlaceScan*>& places, size_t nclasses,
                         std::map<std::string, InvariantVector>& out, bool exact_only) {
    std::vector<std::vector<InvariantVector>> options;
    for (auto* pl : places) {
        if (exact_only && pl->overapprox) {
            // only the witnessed vectors count toward an existence claim
            std::vector<InvariantVector> v;
            for (auto& [vec, w] : pl->examples) v.push_back(vec);
            if (v.empty() && !pl->vectors.empty()) return false;
            options.emplace_back(std::move(v));
        } else {
            options.emplace_back(pl->vectors.begin(), pl->vectors.end());
        }
        if (options.back().empty()) return false;
    }
    std::vector<size_t> idx(places.size(), 0);
    while (true) {
        InvariantVector total(nclasses, 0);
        for (size_t i = 0; i < places.size(); ++i)
            for (size_t cdx = 0; cdx < nclasses; ++cdx)
                total[cdx] = (total[cdx] + options[i][idx[i]][cdx]) % 2;
        if (std::all_of(total.begin(), total.end(), [](int h) { return h == 0; })) {
            out.clear();
            for (size_t i = 0; i < places.size(); ++i) out[places[i]->place] = options[i][idx[i]];
            return true;
        }
        size_t pos = 0;
        while (pos < places.size() && ++idx[pos] == options[pos].size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == places.size()) return false;
    }
}

std::set<long long> critical_primes(const Surface& s, const std::vector<QuaternionClass>& classes,
                                    long long B) {
    std::set<long long> crit{2, 3};
    auto add_divisors = [&](const Int& n) {
        if (n == 0) return;
        for (auto& [q, e] : factorize(n < 0 ? -n : n)) {
            if (q <= B) crit.insert(q.convert_to<long long>());
        }
    };
    add_divisors(s.k);
    for (auto& c : classes) add_divisors(c.constant);
    return crit;
}

}  // namespace

ObstructionReport obstruction_verdict(const Surface& s, const std::vector<QuaternionClass>& classes,
                                      long long B, int depth, std::optional<ProfileId> prof,
                                      std::optional<Int> ell) {
    ObstructionReport rep;
    rep.surface = s;
    rep.profile = prof;
    rep.ell = ell;
    rep.classes = classes;
    rep.solvability = everywhere_locally_solvable(s, B, prof);

    auto crit = critical_primes(s, classes, B);
    rep.places.push_back(real_invariant_scan(s, classes));
    for (long long q : crit) {
        bool all_zero_cert = true;
        for (auto& c : classes) {
            if (q == 2 || !class_local(c, q).zero_cert) {
                all_zero_cert = false;
                break;
            }
        }
        if (all_zero_cert) {
            PlaceScan ps;
            ps.place = std::to_string(q);
            ps.vectors.insert(InvariantVector(classes.size(), 0));
            ps.note = "constant 0 certified: v_p(constant) even with square unit";
            rep.places.push_back(ps);
            continue;
        }
        int d = q == 2 ? std::max(3, depth) : max_scan_depth(q, std::min(depth, 3));
        rep.places.push_back(scan_invariant_vectors(s, classes, q, d));
    }
    rep.tail = tail_certify(classes, crit);

    bool all_stable = true, any_empty = false;
    for (auto& pl : rep.places) {
        if (!pl.stable) all_stable = false;
        if (pl.vectors.empty()) any_empty = true;
    }
    std::vector<const PlaceScan*> pls;
    for (auto& pl : rep.places) pls.push_back(&pl);

    if (!rep.solvability.solvable_up_to_bound || any_empty) {
        rep.verdict = Verdict::inconclusive;
        rep.note = "not locally solvable at some scanned prime; no obstruction question arises";
        return rep;
    }
    std::map<std::string, InvariantVector> sel;
    bool zero_any = find_zero_selection(pls, classes.size(), sel, false);
    if (!zero_any) {
        if (all_stable && rep.tail.certified) {
            rep.verdict = Verdict::obstructed;
        } else {
            rep.verdict = Verdict::inconclusive;
            rep.note = "no zero-sum selection among computed vectors, but some set is unstable/uncertified";
        }
        return rep;
    }
    std::map<std::string, InvariantVector> exact_sel;
    if (find_zero_selection(pls, classes.size(), exact_sel, true) && all_stable && rep.tail.certified) {
        rep.verdict = Verdict::not_obstructed_with_witness;
        rep.zero_sum_selection = exact_sel;
    } else {
        rep.verdict = Verdict::inconclusive;
        rep.note = "zero-sum selection exists only through unwitnessed or unstable sets";
    }
    return rep;
}

SaFailureReport strong_approximation_failure(const Surface& s, const QuaternionClass& c,
                                             std::optional<AffinePoint> known_point, long long search_box) {
    SaFailureReport rep;
    rep.surface = s;
    rep.cls = c;
    if (known_point) {
        if (evaluate(s, *known_point) != Rat(0))
            throw std::invalid_argument("strong_approximation_failure: supplied point not on surface");
        rep.integral_point = FoundPoint{g_canonical(*known_point), g_orbit_size(*known_point)};
    } else {
        auto found = integral_point_search(s, search_box);
        if (!found.empty()) rep.integral_point = found.front();
    }
    auto scan = scan_invariant_vectors(s, {c}, 2, 5);
    bool has0 = scan.vectors.count({0}), has1 = scan.vectors.count({1});
    if (has0 && has1 && rep.integral_point) {
        rep.failure_exhibited = true;
        rep.witness_zero = scan.examples.at({0});
        rep.witness_half = scan.examples.at({1});
        rep.note = "two 2-adic points with invariants 0 and 1/2";
    } else if (!(has0 && has1)) {
        rep.note = "no failure exhibited by this class at p=2: the local invariant is constant";
        if (!rep.integral_point)
            rep.note += "; no integral point found up to box " + std::to_string(search_box);
    } else {
        rep.note = "invariant set {0, 1/2} at p=2, but no integral point found up to box " +
                   std::to_string(search_box) + "; precondition not established";
    }
    return rep;
}

RationalBmReport rational_bm_witness(const Surface& s, const std::vector<QuaternionClass>& classes,
                                     ProfileId prof, long long B, int depth) {
    RationalBmReport rep;
    rep.surface = s;
    rep.classes = classes;
    rep.designated_prime = s.family == FamilyId::F1 ? 2 : 3;

    auto crit = critical_primes(s, classes, B);
    std::vector<PlaceScan> places;
    places.push_back(real_invariant_scan(s, classes));
    for (long long q : crit) {
        if (q == rep.designated_prime) continue;
        bool all_zero_cert = true;
        for (auto& c : classes)
            if (q == 2 || !class_local(c, q).zero_cert) all_zero_cert = false;
        if (all_zero_cert) {
            PlaceScan ps;
            ps.place = std::to_string(q);
            ps.vectors.insert(InvariantVector(classes.size(), 0));
            places.push_back(ps);
            continue;
        }
        int d = q == 2 ? std::max(3, depth) : max_scan_depth(q, std::min(depth, 3));
        places.push_back(scan_invariant_vectors(s, classes, q, d));
    }
    int cap = rep.designated_prime == 2 ? std::max(depth, 6) : 5;
    PlaceScan qp = scan_invariant_vectors_rational(s, classes, rep.designated_prime, cap, 4);
    rep.patterns_found = qp.pattern_vectors;
    places.push_back(qp);

    std::vector<const PlaceScan*> pls;
    for (auto& pl : places) pls.push_back(&pl);
    std::map<std::string, InvariantVector> sel;
    if (find_zero_selection(pls, classes.size(), sel, true)) {
        rep.witness_found = true;
        rep.selection = sel;
        auto qvec = sel.at(qp.place);
        rep.qp_vector = qvec;
        rep.qp_witness = qp.examples.at(qvec);
        rep.note = "adelic selection with zero invariant sum found";
    } else {
        rep.note = "no zero-sum selection within valuation bound -4 and depth " + std::to_string(cap);
    }
    return rep;
}

}  // namespace mk3
