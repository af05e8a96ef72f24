#include "report.hpp"

#include <sstream>

namespace mk3 {

std::string half_str(int halves) { return halves % 2 ? "1/2" : "0"; }

static Json rat_json(const Rat& q) { return to_string(q); }

Json to_json(const RealWitness& w) {
    Json j;
    j["exact"] = w.exact;
    j["pattern"] = w.pattern;
    if (w.exact) {
        j["point"] = {to_string(w.point.x), to_string(w.point.y), to_string(w.point.z)};
    } else {
        j["bracket"] = {to_string(w.lo), to_string(w.hi)};
    }
    return j;
}

Json to_json(const ResidueWitness& w) {
    Json j;
    j["prime"] = w.prime;
    j["exponent"] = w.exponent;
    j["point"] = {w.point[0], w.point[1], w.point[2]};
    j["liftable"] = w.liftable;
    j["lift_margin"] = w.lift_margin;
    return j;
}

Json to_json(const LocalSolvabilityReport& r) {
    Json j;
    j["family"] = family_name(r.surface.family);
    j["k"] = r.surface.k.str();
    j["prime_bound"] = r.prime_bound;
    j["real"] = to_json(r.real);
    Json primes = Json::array();
    for (auto& e : r.primes) {
        Json pe;
        pe["p"] = e.p;
        pe["found"] = e.found;
        pe["searched_depth"] = e.searched_depth;
        if (e.found) pe["witness"] = to_json(e.witness);
        primes.push_back(pe);
    }
    j["primes"] = primes;
    j["failures"] = r.failures;
    j["solvable_up_to_bound"] = r.solvable_up_to_bound;
    if (r.profile) {
        j["profile"] = profile_name(*r.profile);
        j["profile_pass"] = r.profile_pass;
    }
    j["tail_note"] = r.tail_note;
    return j;
}

Json to_json(const PlaceScan& s, size_t nclasses) {
    Json j;
    j["place"] = s.place;
    Json vecs = Json::array();
    for (auto& v : s.vectors) {
        Json vv = Json::array();
        for (int h : v) vv.push_back(half_str(h));
        vecs.push_back(vv);
    }
    j["vectors"] = vecs;
    j["stable"] = s.stable;
    if (s.overapprox) j["overapprox"] = true;
    if (!s.note.empty()) j["note"] = s.note;
    if (s.cap) j["depth_cap"] = s.cap;
    Json exs = Json::array();
    for (auto& [v, w] : s.examples) {
        Json e;
        Json vv = Json::array();
        for (int h : v) vv.push_back(half_str(h));
        e["vector"] = vv;
        e["shifts"] = {w.shifts[0], w.shifts[1], w.shifts[2]};
        e["residues"] = {w.residues[0], w.residues[1], w.residues[2]};
        e["modexp"] = w.modexp;
        exs.push_back(e);
    }
    if (!exs.empty()) j["witnesses"] = exs;
    (void)nclasses;
    return j;
}

Json to_json(const ObstructionReport& r) {
    Json j;
    j["family"] = family_name(r.surface.family);
    j["k"] = r.surface.k.str();
    if (r.profile) j["profile"] = profile_name(*r.profile);
    if (r.ell) j["ell"] = r.ell->str();
    Json cls = Json::array();
    for (auto& c : r.classes) {
        Json cj;
        cj["label"] = c.label;
        Json reps = Json::array();
        for (auto& rep : c.reps) reps.push_back(rep.str());
        cj["first_slots"] = reps;
        cj["constant"] = c.constant.str();
        cls.push_back(cj);
    }
    j["classes"] = cls;
    Json places = Json::array();
    for (auto& pl : r.places) places.push_back(to_json(pl, r.classes.size()));
    j["places"] = places;
    Json tail;
    tail["certified"] = r.tail.certified;
    tail["notes"] = r.tail.notes;
    j["tail"] = tail;
    j["solvability"] = to_json(r.solvability);
    j["verdict"] = verdict_name(r.verdict);
    if (r.zero_sum_selection) {
        Json sel;
        for (auto& [place, v] : *r.zero_sum_selection) {
            Json vv = Json::array();
            for (int h : v) vv.push_back(half_str(h));
            sel[place] = vv;
        }
        j["zero_sum_selection"] = sel;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json to_json(const SaFailureReport& r) {
    Json j;
    j["family"] = family_name(r.surface.family);
    j["k"] = r.surface.k.str();
    j["class"] = r.cls.label;
    j["failure_exhibited"] = r.failure_exhibited;
    if (r.integral_point) {
        j["integral_point"] = {to_string(r.integral_point->point.x), to_string(r.integral_point->point.y),
                               to_string(r.integral_point->point.z)};
        j["orbit_size"] = r.integral_point->orbit_size;
    }
    if (r.failure_exhibited) {
        auto wit = [](const ScanWitness& w) {
            Json e;
            e["residues"] = {w.residues[0], w.residues[1], w.residues[2]};
            e["modexp"] = w.modexp;
            return e;
        };
        j["witness_invariant_0"] = wit(r.witness_zero);
        j["witness_invariant_half"] = wit(r.witness_half);
    }
    j["note"] = r.note;
    return j;
}

Json to_json(const RationalBmReport& r) {
    Json j;
    j["family"] = family_name(r.surface.family);
    j["k"] = r.surface.k.str();
    j["designated_prime"] = r.designated_prime;
    j["witness_found"] = r.witness_found;
    Json pats = Json::array();
    for (auto& [sh, v] : r.patterns_found) {
        Json pe;
        pe["valuations"] = {-sh[0], -sh[1], -sh[2]};
        Json vv = Json::array();
        for (int h : v) vv.push_back(half_str(h));
        pe["vector"] = vv;
        pats.push_back(pe);
    }
    j["qp_patterns"] = pats;
    if (r.witness_found) {
        Json w;
        w["valuations"] = {-r.qp_witness.shifts[0], -r.qp_witness.shifts[1], -r.qp_witness.shifts[2]};
        w["residues"] = {r.qp_witness.residues[0], r.qp_witness.residues[1], r.qp_witness.residues[2]};
        w["modexp"] = r.qp_witness.modexp;
        j["qp_witness"] = w;
        Json sel;
        for (auto& [place, v] : r.selection) {
            Json vv = Json::array();
            for (int h : v) vv.push_back(half_str(h));
            sel[place] = vv;
        }
        j["selection"] = sel;
    }
    j["note"] = r.note;
    return j;
}

static Json cohom_json(const CohomologyResult& c) {
    Json j;
    Json f = Json::array();
    for (auto& d : c.invariant_factors) f.push_back(d.str());
    j["invariant_factors"] = f;
    j["free_rank"] = c.free_rank;
    return j;
}

Json to_json(const LatticeReport& r) {
    Json j;
    j["gram_det"] = r.det.str();
    j["alt_basis_det"] = r.alt_det.str();
    j["signature"] = {r.inertia[0], r.inertia[1]};
    j["even"] = r.even;
    j["gram_matches_display"] = r.gram_matches_display;
    j["relations_match_display"] = r.relations_match_display;
    j["c_plus_relations_hold"] = r.c_plus_relations_hold;
    j["c_minus_collapse_holds"] = r.c_minus_collapse_holds;
    j["sigma_block_matches_display"] = r.sigma_block_matches_display;
    j["rho_kernel_matches_claim"] = r.rho_kernel_matches_claim;
    j["action_isometry"] = r.action_isometry;
    j["action_presentation"] = r.action_presentation;
    j["h1_pic_W"] = cohom_json(r.h1_picW);
    j["h1_pic_U"] = cohom_json(r.h1_picU);
    j["h1_rho_W"] = cohom_json(r.h1_rho_W);
    j["h1_rho_U"] = cohom_json(r.h1_rho_U);
    j["h1_sigma_W_rho"] = cohom_json(r.h1_sigma_Wrho);
    j["h1_sigma_U_rho"] = cohom_json(r.h1_sigma_Urho);
    Json q;
    q["rank"] = r.fiber_quotient.rank;
    Json tor = Json::array();
    for (auto& t : r.fiber_quotient.torsion) tor.push_back(t.str());
    q["torsion"] = tor;
    j["fiber_quotient"] = q;
    Json hs = Json::array();
    for (auto& h : r.half_sums) {
        Json e;
        e["bits"] = h.bits;
        e["self_intersection"] = to_string(h.self_intersection);
        e["verdict"] = h.verdict;
        hs.push_back(e);
    }
    j["half_sum_candidates"] = hs;
    j["discrepancies"] = r.discrepancies;
    return j;
}

Json to_json(const FrobeniusReport& r) {
    Json j;
    j["p"] = r.table.p;
    Json counts = Json::array();
    for (auto& [n, c] : r.table.counts) {
        Json e;
        e["n"] = n;
        e["count"] = c;
        counts.push_back(e);
    }
    j["counts"] = counts;
    Json tr = Json::array();
    for (auto& t : r.traces) tr.push_back(rat_json(t));
    j["quotient_traces"] = tr;
    Json cp = Json::array();
    for (auto& c : r.charpoly.quotient) cp.push_back(rat_json(c));
    j["charpoly_quotient"] = cp;
    j["fixed_factors"] = {{"t_minus_1", r.charpoly.exp_t_minus_1}, {"t_plus_1", r.charpoly.exp_t_plus_1}};
    j["unity_roots_quotient"] = r.unity_roots_quotient;
    j["unity_roots_full"] = r.unity_roots_full;
    j["picard_rank_upper_bound"] = r.unity_roots_full;
    j["lefschetz_ok"] = r.lefschetz_ok;
    return j;
}

Json to_json(const CensusSummary& s) {
    Json j;
    j["profile"] = profile_name(s.profile);
    j["prime_ell"] = s.prime_ell;
    j["M"] = s.M;
    j["count"] = s.count;
    j["predicted_congruence_density"] = s.predicted_congruence_density;
    Json lad = Json::array();
    for (auto& lp : s.ladder) {
        Json e;
        e["M"] = lp.M;
        e["count"] = lp.count;
        e["count_over_M"] = lp.count_over_M;
        e["count_logM_over_sqrtM"] = lp.count_logM_sqrtM;
        lad.push_back(e);
    }
    j["ladder"] = lad;
    return j;
}

Json to_json(const HasseCensus& c) {
    Json j;
    j["family"] = family_name(c.family);
    j["profile"] = profile_name(c.profile);
    j["M"] = c.M;
    j["prime_bound"] = c.B;
    j["depth"] = c.depth;
    j["rows"] = c.rows.size();
    j["solvable"] = c.solvable_count;
    j["obstructed"] = c.obstructed_count;
    j["inconclusive"] = c.inconclusive_count;
    j["row_budget_hit"] = c.row_budget_hit;
    if (c.M >= 2) {
        double ratio = (double)c.obstructed_count * std::log((double)c.M) / std::sqrt((double)c.M);
        j["obstructed_logM_over_sqrtM"] = ratio;
    }
    return j;
}

Json search_json(const Surface& s, const std::vector<FoundPoint>& pts, bool rational) {
    Json j;
    j["family"] = family_name(s.family);
    j["k"] = s.k.str();
    j["mode"] = rational ? "rational" : "integral";
    Json arr = Json::array();
    for (auto& fp : pts) {
        Json e;
        e["x"] = to_string(fp.point.x);
        e["y"] = to_string(fp.point.y);
        e["z"] = to_string(fp.point.z);
        e["orbit_size"] = fp.orbit_size;
        arr.push_back(e);
    }
    j["points"] = arr;
    return j;
}

int report_exit_code(const ObstructionReport& r) {
    return r.verdict == Verdict::inconclusive ? 2 : 0;
}

std::string matrix_text(const IntMat& m) {
    std::ostringstream os;
    for (auto& row : m) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j].str();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace mk3
