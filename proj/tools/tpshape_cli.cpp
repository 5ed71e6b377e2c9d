// tpshape: sequence shape, sign regularity and kernel transform analysis.
//
// Exit codes: 0 success, 1 input error, 2 theorem hypothesis unmet,
// 3 a checked theorem conclusion failed (falsification).

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tpshape/io.hpp"
#include "tpshape/report.hpp"
#include "tpshape/tpshape.hpp"

namespace {

using namespace tpshape;
using nlohmann::json;

std::string fixed4(const Seq& u)
{
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += ", ";
        out += render_decimal(u[i], 4, false);
    }
    return out;
}

json interval_json(const IndexInterval& iv) { return json::array({iv.first, iv.last}); }

std::string interval_text(const std::vector<IndexInterval>& ivs)
{
    std::string out;
    for (const auto& iv : ivs) {
        if (!out.empty()) out += ' ';
        out += '[' + std::to_string(iv.first) + ',' + std::to_string(iv.last) + ']';
    }
    return out.empty() ? "none" : out;
}

std::string parts_text(const std::vector<Seq>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += '(' + to_string(p) + ')';
    }
    return out;
}

json parts_json(const std::vector<Seq>& parts)
{
    json a = json::array();
    for (const auto& p : parts) a.push_back(io::seq_to_json(p));
    return a;
}

void emit_report(const Report& r, bool as_json, const std::string& human)
{
    if (as_json)
        std::cout << json(r).dump() << '\n';
    else
        std::cout << human;
}

// ---------------------------------------------------------------- analyze

Report analyze_one(const Seq& u, std::string& human)
{
    Report r;
    r.command = "analyze";
    r.inputs_echo = {{"u", io::seq_to_json(u)}};

    const auto pattern = sign_changes(u);
    const auto prof = modality(u);
    std::ostringstream h;
    h << "sequence: " << to_string(u) << '\n'
      << "S = " << pattern.count << ", sign pattern " << (pattern.signs.empty() ? "(none)" : pattern.compressed()) << '\n'
      << "S+ = " << prof.s_plus.value << " at lambda = " << to_string(prof.s_plus.witness_lambda) << '\n'
      << "regularity M = " << prof.regular_M << '\n'
      << "m = " << prof.m << ", modes: " << interval_text(prof.mode_intervals)
      << ", valleys: " << interval_text(prof.valley_intervals) << '\n';

    json res;
    res["S"] = pattern.count;
    res["sign_pattern"] = pattern.compressed();
    res["S_plus"] = {{"value", prof.s_plus.value}, {"witness_lambda", to_string(prof.s_plus.witness_lambda)}};
    res["regularity_M"] = prof.regular_M;
    res["m"] = prof.m;
    res["mode_intervals"] = json::array();
    for (const auto& iv : prof.mode_intervals) res["mode_intervals"].push_back(interval_json(iv));
    res["valley_intervals"] = json::array();
    for (const auto& iv : prof.valley_intervals) res["valley_intervals"].push_back(interval_json(iv));

    const auto part = decompose(u, prof.m, SplitKind::partition);
    const auto dec = decompose(u, prof.m, SplitKind::decomposition);
    const auto aligned = mode_align(dec);
    res["partition"] = parts_json(part.parts);
    res["decomposition"] = parts_json(dec.parts);
    json shifts = json::array();
    for (const auto& s : aligned.shifts) shifts.push_back(to_string(s));
    res["mode_aligned"] = {{"shifts", shifts}, {"common_mode", to_string(aligned.common_mode)}};
    h << "partition: " << parts_text(part.parts) << '\n'
      << "decomposition: " << parts_text(dec.parts) << '\n'
      << "mode-aligned shifts:";
    for (const auto& s : aligned.shifts) h << ' ' << to_string(s);
    h << ", common mode " << to_string(aligned.common_mode) << '\n';

    if (u.is_constant()) {
        res["negation"] = nullptr;
        h << "-u: constant\n";
    } else {
        const auto neg = negate_modality(u);
        res["negation"] = {{"m_neg", neg.m_neg}, {"aligned_s_plus", neg.aligned_s_plus}};
        h << "-u is " << neg.m_neg << "-modal (aligned S+ = " << neg.aligned_s_plus << ")\n";
        r.citations.push_back("reversal rule: S+ of the mode-aligned decomposition fixes the modality of -u");
    }
    res["unimodal_by_signs"] = is_unimodal_by_signs(u);
    res["mmodal_by_signs"] = check_mmodal_by_signs(u, prof.m);
    h << "sign characterization of " << prof.m << "-modality: " << (res["mmodal_by_signs"].get<bool>() ? "holds" : "fails") << '\n';

    r.citations.push_back("modality from right-to-left peak extraction on the run-compressed sequence");
    r.citations.push_back("unimodal m-partition cut at the first index of each valley interval");
    r.results = res;
    human = h.str();
    return r;
}

int cmd_analyze(const std::string& path, bool as_json)
{
    const auto seqs = io::sequences_from_text(io::read_file(path));
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        std::string human;
        auto r = analyze_one(seqs[i], human);
        if (i && !as_json) std::cout << '\n';
        emit_report(r, as_json, human);
    }
    return 0;
}

// --------------------------------------------------------------- classify

json report_json(const SRReport& rep)
{
    json eps = json::array();
    for (auto e : rep.eps) eps.push_back(to_string(e));
    json out = {{"r_max", rep.r_max}, {"eps", eps}, {"is_TP", rep.is_TP}, {"is_TN", rep.is_TN}};
    if (rep.witness) {
        auto minor = [](const Minor& m) {
            return json{{"rows", m.rows}, {"cols", m.cols}, {"value", to_string(m.value)}};
        };
        out["witness"] = {minor(rep.witness->first), minor(rep.witness->second)};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

std::string index_set(const std::vector<std::size_t>& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

int cmd_classify(const std::string& path, std::optional<std::size_t> order, std::size_t m, bool as_json)
{
    const Kernel K = io::kernel_from_text(io::read_file(path));
    const std::size_t dim = std::min(K.rows(), K.cols());
    const std::size_t r = order.value_or(dim);
    if (r < 1 || r > dim)
        throw input_error("--order " + std::to_string(r) + " outside 1.." + std::to_string(dim));
    if (m < 1) throw input_error("--m must be at least 1");

    const auto rep = classify(K, r);
    const auto wide = classify(K, std::min(dim, std::max(r, 2 * m + 1)));

    Report out;
    out.command = "classify";
    out.inputs_echo = {{"matrix", io::kernel_to_json(K)}, {"order", r}, {"m", m}};
    json res = report_json(rep);
    res["SR"] = rep.sr(r);
    res["TP"] = rep.tp(r);
    res["TN"] = rep.tn(r);

    std::ostringstream h;
    const std::string rs = std::to_string(r);
    h << "kernel " << K.shape() << ", orders 1.." << r << '\n' << "eps:";
    for (auto e : rep.eps) h << ' ' << to_string(e);
    h << '\n'
      << "SR_" << rs << ": " << (rep.sr(r) ? "yes" : "no") << '\n'
      << "TP_" << rs << ": " << (rep.tp(r) ? "yes" : "no") << '\n'
      << "TN_" << rs << ": " << (rep.tn(r) ? "yes" : "no") << '\n';
    if (rep.witness) {
        const auto& [p, n] = *rep.witness;
        h << "witness: minor rows " << index_set(p.rows) << " cols " << index_set(p.cols) << " = "
          << to_string(p.value) << ", minor rows " << index_set(n.rows) << " cols " << index_set(n.cols)
          << " = " << to_string(n.value) << '\n';
    }

    if (wide.covers(3)) {
        const auto v = up_ur_verdict(wide);
        res["unimodality_verdict"] = {{"kind", to_string(v.kind)}, {"clause", v.clause}};
        h << "unimodality verdict: " << to_string(v.kind) << " (" << v.clause << ")\n";
        out.citations.push_back("UP iff eps1 = +1 and eps2 = eps3; UR iff eps1 = -1 and eps2 = -eps3");
    }
    const auto mv = modality_verdict(wide, m);
    const auto cv = convexity_verdict(wide, m);
    res["modality_verdict"] = {{"kind", to_string(mv.kind)}, {"m", m}, {"clause", mv.clause}};
    res["convexity_verdict"] = {{"kind", to_string(cv.kind)}, {"m", m}, {"clause", cv.clause}};
    h << "modality verdict (m = " << m << "): " << to_string(mv.kind) << " (" << mv.clause << ")\n"
      << "convexity verdict (m = " << m << "): " << to_string(cv.kind) << " (" << cv.clause << ")\n";
    out.citations.push_back("m-modality: TP_{2m+1} or -K TN_{2m+1} preserves; -K TP_{2m+1} or K TN_{2m+1} reverses");
    out.citations.push_back("m-convexity: the same clauses at order m+1");
    out.results = res;
    emit_report(out, as_json, h.str());
    return 0;
}

// --------------------------------------------------------------- quotient

json quotient_json(const QuotientResult& q)
{
    json out = {{"w", io::seq_to_json(q.w)},
                {"w_4dp", fixed4(q.w)},
                {"p", q.p},
                {"ratio_m", q.ratio_m},
                {"clause", q.clause},
                {"asserted", q.asserted},
                {"hypothesis_note", q.hypothesis_note}};
    out["ratio_class"] = q.ratio_class ? json(to_string(*q.ratio_class)) : json(nullptr);
    out["w_class"] = q.convexity_class ? json(to_string(*q.convexity_class)) : json(nullptr);
    return out;
}

int cmd_quotient(const std::vector<std::string>& files, std::size_t m, bool as_json)
{
    std::optional<Kernel> K;
    std::optional<Seq> u, v;
    if (files.size() == 1) {
        auto env = io::parse_envelope(io::read_file(files[0]));
        K = env.matrix;
        u = env.u;
        v = env.v;
        if (!K || !u || !v) throw input_error("JSON envelope needs \"matrix\", \"u\" and \"v\"");
    } else if (files.size() == 3) {
        K = io::kernel_from_text(io::read_file(files[0]));
        u = io::sequence_from_text(io::read_file(files[1]));
        v = io::sequence_from_text(io::read_file(files[2]));
    } else {
        throw input_error("quotient takes a JSON envelope or three files: matrix u v");
    }
    if (m < 1) throw input_error("--m must be at least 1");

    const auto mod = quotient_transform(*K, *u, *v, m);
    std::optional<QuotientResult> conv;
    if (u->size() > m && K->rows() > m) conv = quotient_convexity(*K, *u, *v, m);

    Report out;
    out.command = "quotient";
    out.inputs_echo = {{"matrix", io::kernel_to_json(*K)}, {"u", io::seq_to_json(*u)},
                       {"v", io::seq_to_json(*v)}, {"m", m}};
    json res = {{"Ku", io::seq_to_json(mod.Ku)}, {"Kv", io::seq_to_json(mod.Kv)},
                {"w", io::seq_to_json(mod.w)}, {"w_4dp", fixed4(mod.w)},
                {"ratio", io::seq_to_json(mod.ratio)}};
    res["modality"] = quotient_json(mod);
    res["convexity"] = conv ? quotient_json(*conv) : json(nullptr);

    std::ostringstream h;
    h << "Ku = " << to_string(mod.Ku) << '\n'
      << "Kv = " << to_string(mod.Kv) << '\n'
      << "w = " << to_string(mod.w) << '\n'
      << "w (4 dp) = " << fixed4(mod.w) << '\n'
      << "u/v = " << to_string(mod.ratio) << " (" << mod.ratio_m << "-modal)\n"
      << "p = " << mod.p << " (w is " << mod.p << "-modal)\n";
    if (mod.asserted)
        h << "modality theorem: asserted under " << mod.clause << ", bound holds\n";
    else
        h << "modality theorem: not asserted (" << mod.hypothesis_note << ")\n";
    if (conv) {
        h << "u/v order-" << m << " class: " << to_string(*conv->ratio_class) << '\n'
          << "w order-" << m << " class: " << to_string(*conv->convexity_class) << '\n';
        if (conv->asserted)
            h << "convexity theorem: asserted under " << conv->clause << ", class relation holds\n";
        else
            h << "convexity theorem: not asserted (" << conv->hypothesis_note << ")\n";
    }
    out.citations.push_back("quotient identity w - l = K(v (u/v - l)) / Kv");
    if (mod.asserted) out.citations.push_back("quotient modality bound under " + mod.clause);
    if (conv && conv->asserted) out.citations.push_back("quotient convexity under " + conv->clause);
    out.results = res;
    emit_report(out, as_json, h.str());

    if (!mod.asserted && !(conv && conv->asserted)) {
        std::cerr << "no theorem applies: " << mod.hypothesis_note
                  << (conv ? "; " + conv->hypothesis_note : std::string()) << '\n';
        return 2;
    }
    return 0;
}

// ---------------------------------------------------------------- dompoly

int cmd_dompoly(std::size_t m, std::size_t k, std::size_t n_max, const std::string& seeds_path,
                const std::string& shape_name, bool as_json)
{
    if (m < 1) throw input_error("--m must be at least 1");
    PolyShape shape;
    if (shape_name == "unimodal")
        shape = PolyShape::unimodal;
    else if (shape_name == "convex")
        shape = PolyShape::convex;
    else if (shape_name == "concave")
        shape = PolyShape::concave;
    else
        throw input_error("--shape must be unimodal, convex or concave");

    std::vector<PolySeq> seeds;
    if (seeds_path.empty()) {
        for (std::size_t i = 0; i < m; ++i) seeds.emplace_back(std::vector<Rational>{1}, i + 1);
    } else {
        auto rows = io::parse_csv(io::read_file(seeds_path));
        for (std::size_t i = 0; i < rows.size(); ++i) seeds.emplace_back(rows[i], i + 1);
    }
    if (seeds.size() < m)
        throw input_error("need " + std::to_string(m) + " seed polynomials, got " + std::to_string(seeds.size()));

    const auto rep = shape_propagation(seeds, m, k, n_max, shape);
    const auto by_kernel = unroll_by_kernel(seeds, m, k, n_max);
    bool agree = by_kernel.size() == rep.generations.size();
    for (std::size_t i = 0; agree && i < by_kernel.size(); ++i) agree = by_kernel[i] == rep.generations[i].poly;
    if (!agree) throw falsified("kernel form and recurrence disagree");

    Report out;
    out.command = "dompoly";
    json seeds_json = json::array();
    for (std::size_t i = 0; i < m; ++i) seeds_json.push_back(io::seq_to_json(seeds[i].as_seq()));
    out.inputs_echo = {{"m", m}, {"k", k}, {"n_max", n_max}, {"shape", shape_name}, {"seeds", seeds_json}};
    json gens = json::array();
    std::ostringstream h;
    for (const auto& g : rep.generations) {
        gens.push_back({{"n", g.poly.n},
                        {"coeffs", io::seq_to_json(g.poly.as_seq())},
                        {"modality", g.modality},
                        {"convexity", to_string(g.convexity)}});
        h << "f_" << g.poly.n << ": " << to_string(g.poly.as_seq()) << " | "
          << (g.modality == 1 ? std::string("unimodal") : std::to_string(g.modality) + "-modal")
          << " | order-2 " << to_string(g.convexity) << '\n';
    }
    h << "kernel and recurrence agree through n = " << n_max << '\n'
      << "f_" << m + 1 << " is " << shape_name << ", and so is every generation through n = " << n_max << '\n';
    out.results = {{"generations", gens}, {"kernel_agrees", agree}};
    out.citations.push_back("f_n = sum_{i=n-m}^{n-1} x^k f_i and its banded kernel form");
    out.citations.push_back("shape of f_{m+1} propagates to every f_n, n > m");
    emit_report(out, as_json, h.str());
    return 0;
}

// --------------------------------------------------------------- selftest

int cmd_selftest(std::uint64_t seed)
{
    std::size_t failed = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << '\n';
        if (!ok) ++failed;
    };
    const Kernel A({{-1, -2, -3, -4}, {-5, -6, -7, -8}, {-9, -10, -11, -11}, {-13, -14, -15, -11}});

    check("golden example 1", fixed4(quotient_transform(A, Seq{0, 3, 3, 1}, Seq{1, 1, 1, 1}, 1).w)
                                  == "1.9000, 1.8077, 1.8049, 1.8491");
    check("golden example 2", fixed4(quotient_transform(A, Seq{6, 5, 6, 7}, Seq{3, 1, 2, 1}, 2).w)
                                  == "4.1333, 3.6744, 3.5286, 3.3511");
    check("golden example 3", fixed4(quotient_transform(A, Seq{4, 2, 1, 2}, Seq{1, 1, 2, 2}, 2).w)
                                  == "1.1176, 1.3415, 1.4127, 1.4810");
    const auto part = decompose(Seq{1, 5, 3, 4, 2}, 2, SplitKind::partition);
    check("partition example", part.parts.size() == 2 && part.parts[0] == Seq{1, 5, 3} && part.parts[1] == Seq{4, 2});

    oracle::TrialConfig cfg;
    cfg.seed = seed;
    bool ok = true;
    for (std::size_t t = 0; t < 300 && ok; ++t) {
        auto rng = cfg.rng_for(t);
        Kernel K(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) K(i, j) = oracle::uniform_int(rng, -1, 1);
        ok = classify(K).eps == oracle::naive_signature(K, 3);
    }
    check("classify agrees with cofactor oracle (300 random 3x3)", ok);

    ok = true;
    for (std::size_t t = 0; t < 300 && ok; ++t) {
        auto rng = cfg.rng_for(1000 + t);
        auto u = oracle::random_seq(rng, static_cast<std::size_t>(oracle::uniform_int(rng, 1, 7)), -2, 2);
        ok = modality(u).m == oracle::brute_modality(u) && s_plus(u).value == oracle::brute_s_plus(u);
    }
    check("modality and S+ agree with brute force (300 random)", ok);

    ok = true;
    for (std::size_t t = 0; t < 100 && ok; ++t) {
        auto rng = cfg.rng_for(2000 + t);
        auto K = oracle::random_tp_kernel(rng, 4);
        auto u = oracle::random_seq(rng, 4, -3, 3);
        if (sign_changes(u).count > 2) continue;
        ok = vd_check(K, u, 3).holds;
    }
    check("variation diminishing on 100 random TP kernels", ok);

    ok = true;
    for (std::size_t t = 0; t < 100 && ok; ++t) {
        auto rng = cfg.rng_for(3000 + t);
        auto u = oracle::random_seq(rng, static_cast<std::size_t>(oracle::uniform_int(rng, 2, 10)), -3, 3);
        if (u.is_constant()) continue;
        ok = negate_modality(u).m_neg == modality(-u).m;
    }
    check("reversal rule on 100 random sequences", ok);

    const std::vector<PolySeq> seeds{{{1, 1}, 1}, {{0, 2, 2}, 2}};
    ok = true;
    const auto rec = unroll(seeds, 2, 1, 12), ker = unroll_by_kernel(seeds, 2, 1, 12);
    for (std::size_t i = 0; i < rec.size(); ++i) ok = ok && rec[i] == ker[i];
    check("recurrence equals kernel form through n = 12", ok);

    std::cout << (failed ? "selftest: " + std::to_string(failed) + " failed" : std::string("selftest: all passed")) << '\n';
    return failed ? 3 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tpshape: exact shape analysis of sequences and sign-regular kernels"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON reports (one per line)");

    std::string analyze_file;
    auto* analyze = app.add_subcommand("analyze", "sign changes, S+, modality, decompositions of sequences");
    analyze->add_option("file", analyze_file, "CSV (one sequence per line) or JSON envelope")->required();

    std::string classify_file;
    std::optional<std::size_t> order;
    std::size_t classify_m = 1;
    auto* classify_cmd = app.add_subcommand("classify", "minor signs, TP/TN/SR, UP/UR and preserver verdicts");
    classify_cmd->add_option("file", classify_file, "matrix as CSV rows or JSON envelope")->required();
    classify_cmd->add_option("--order", order, "highest minor order (default min(R, C))");
    classify_cmd->add_option("--m", classify_m, "modality/convexity order for verdicts")->capture_default_str();

    std::vector<std::string> quotient_files;
    std::size_t quotient_m = 1;
    auto* quotient_cmd = app.add_subcommand("quotient", "w = Ku / Kv with modality and convexity checks");
    quotient_cmd->add_option("files", quotient_files, "JSON envelope, or matrix u v files")->required()->expected(1, 3);
    quotient_cmd->add_option("--m", quotient_m, "modality/convexity order of u/v")->capture_default_str();

    std::size_t dp_m = 1, dp_k = 1, dp_nmax = 32;
    std::string seeds_file, shape = "unimodal";
    auto* dompoly = app.add_subcommand("dompoly", "shift-sum polynomial recurrence and shape propagation");
    dompoly->add_option("--m", dp_m, "number of previous polynomials summed")->capture_default_str();
    dompoly->add_option("--k", dp_k, "power of x multiplying the sum")->capture_default_str();
    dompoly->add_option("--n-max", dp_nmax, "last generation")->capture_default_str();
    dompoly->add_option("--seeds", seeds_file, "CSV, one seed coefficient list per line (default: all ones)");
    dompoly->add_option("--shape", shape, "unimodal, convex or concave")->capture_default_str();

    std::uint64_t seed = 20240917;
    auto* selftest = app.add_subcommand("selftest", "quick built-in consistency checks");
    selftest->add_option("--seed", seed, "RNG seed for the randomized checks")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_file, as_json);
        if (*classify_cmd) return cmd_classify(classify_file, order, classify_m, as_json);
        if (*quotient_cmd) return cmd_quotient(quotient_files, quotient_m, as_json);
        if (*dompoly) return cmd_dompoly(dp_m, dp_k, dp_nmax, seeds_file, shape, as_json);
        if (*selftest) return cmd_selftest(seed);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const hypothesis_unmet& e) {
        std::cerr << "hypothesis unmet: " << e.what() << '\n';
        return 2;
    } catch (const falsified& e) {
        std::cerr << "falsified: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
