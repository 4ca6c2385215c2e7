/*
   Copyright 2026 The plbc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end: construct codes, encode/decode single words, run
// Monte Carlo sweeps, and evaluate the analytic failure bounds. All commands
// are deterministic under a fixed --seed, independent of --threads.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plbc/plbc.hpp"

namespace {

using namespace plbc;

struct CodeOptions {
    std::string spec_path;
    bool inline_pbch = false;
    std::size_t n = 0;
    unsigned m = 0;
    std::string g1_hex, g0_hex, primitive_hex;
    unsigned designed_d0 = 0;
    std::optional<std::size_t> user_d0;

    void attach(CLI::App* cmd, bool with_designed) {
        cmd->add_option("--spec", spec_path, "code-spec JSON file");
        cmd->add_flag("--pbch", inline_pbch, "define a PBCH code inline");
        cmd->add_option("--n", n, "block length (2^m - 1)");
        cmd->add_option("--m", m, "field extension degree (inferred from n when omitted)");
        cmd->add_option("--g1", g1_hex, "message generator polynomial, hex mask");
        cmd->add_option("--g0", g0_hex, "masking generator polynomial, hex mask");
        cmd->add_option("--primitive", primitive_hex, "primitive polynomial, hex mask");
        if (with_designed)
            cmd->add_option("--d0", designed_d0,
                            "designed masking distance; with --n alone, selects the r = 0 family member");
    }

    unsigned infer_m() const {
        unsigned mm = m;
        if (mm == 0) {
            while ((std::size_t(1) << (mm + 1)) - 1 <= n) ++mm;
            if ((std::size_t(1) << mm) - 1 != n)
                throw invalid_spec_error("n = " + std::to_string(n) + " is not of the form 2^m - 1");
        }
        return mm;
    }

    /// Resolves the code selection; keeps the PBCH spec when one exists so
    /// cyclic decoding and the BCH baselines stay available.
    std::pair<PlbcCode, std::optional<PbchSpec>> resolve() const {
        if (!spec_path.empty()) {
            CodeSpecFile file = CodeSpecFile::load(spec_path);
            return {file.build(), file.pbch};
        }
        if (n == 0) throw invalid_spec_error("no code given: use --spec or --pbch/--n options");
        const unsigned mm = infer_m();
        const BinaryPolynomial prim =
            primitive_hex.empty() ? FieldGF2m::default_primitive(mm) : BinaryPolynomial::from_hex(primitive_hex);
        if (!g0_hex.empty()) {
            PbchSpec spec{n, FieldGF2m(mm, prim),
                          g1_hex.empty() ? BinaryPolynomial::one() : BinaryPolynomial::from_hex(g1_hex),
                          BinaryPolynomial::from_hex(g0_hex)};
            return {pbch_build(spec), spec};
        }
        // Family-member shorthand: --n with a designed d0.
        const unsigned delta = designed_d0 == 0 ? 5 : designed_d0;
        PbchSpec spec = pbch_with_designed_d0(mm, delta, prim);
        return {pbch_build(spec), spec};
    }
};

struct OutputOption {
    std::string path;

    void attach(CLI::App* cmd) { cmd->add_option("--out", path, "output file (default stdout)"); }

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::invalid_argument("cannot open output file '" + path + "'");
        return *file_;
    }

  private:
    std::unique_ptr<std::ofstream> file_;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

std::string code_summary(const PlbcCode& code) {
    std::ostringstream os;
    os << "n=" << code.n << " k=" << code.k << " l=" << code.l << " r=" << code.r << " d1=" << code.d1
       << " d0=" << code.d0 << " t0=" << code.t0 << " d0_provenance=" << to_string(code.d0_provenance);
    return os.str();
}

// --------------------------------------------------------------------------

int cmd_construct(const CodeOptions& opts, const std::string& save_spec, OutputOption& out) {
    auto [code, spec] = opts.resolve();
    if (!save_spec.empty()) {
        CodeSpecFile file;
        if (spec) {
            file.pbch = spec;
        } else {
            file.plbc_rows = std::make_pair(code.g1, code.g0);
            if (code.d0_provenance == D0Provenance::user_supplied) file.user_d0 = code.d0;
        }
        file.save(save_spec);
    }
    out.stream() << code_summary(code) << "\n";
    return 0;
}

int cmd_encode(const CodeOptions& opts, const std::string& scheme_name, const std::string& w_bits,
               const std::string& defect_text, bool random_locations, std::uint64_t seed, OutputOption& out) {
    auto [code, spec] = opts.resolve();
    const Scheme scheme = parse_scheme(scheme_name);
    if (!is_encoder_scheme(scheme)) throw std::invalid_argument("encode: scheme must be an encoder scheme");
    const BitVector w = BitVector::from_string(w_bits);
    const DefectVector s = DefectVector::parse(defect_text, code.n);

    RngStream rng(seed, 0);
    LocationSelector sel{random_locations ? LocationPolicy::uniform_random : LocationPolicy::highest_first, &rng};
    EncodeResult res = scheme == Scheme::optimal    ? encode_optimal(code, w, s)
                       : scheme == Scheme::one_step ? encode_one_step(code, w, s, sel)
                                                    : encode_two_step(code, w, s, sel);
    out.stream() << encode_csv_row(res) << "\n";
    return res.unmasked == 0 ? 0 : 1;
}

int cmd_decode(const CodeOptions& opts, const std::string& y_bits, bool pcc, OutputOption& out) {
    auto [code, spec] = opts.resolve();
    const BitVector y = BitVector::from_string(y_bits);
    if (pcc) {
        if (!spec) throw invalid_spec_error("decode --pcc requires a PBCH code spec");
        const BitVector z = detail::estimate_error(code, y);
        const BitVector w = decode_pcc(*spec, code, y);
        out.stream() << w.to_string() << ',' << z.to_string() << "\n";
        return 0;
    }
    auto [w, z] = decode_plbc(code, y);
    out.stream() << w.to_string() << ',' << z.to_string() << "\n";
    return 0;
}

struct SimulateArgs {
    std::string sweep;  // "", "u", "epsilon", "rate"
    long from = -1, to = -1;
    long step = 1;
    long fixed_u = -1;
    std::string epsilon;
    std::string eps_list;
    std::string d0_list;
    std::string schemes = "two-step";
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    double p = 0.0;
    unsigned threads = 1;
    bool random_locations = false;
    std::string rank_csv;
};

int cmd_simulate(const CodeOptions& opts, const SimulateArgs& args, OutputOption& out) {
    std::vector<Scheme> schemes;
    for (const auto& s : split_list(args.schemes)) schemes.push_back(parse_scheme(s));
    if (schemes.empty()) throw std::invalid_argument("simulate: no schemes given");

    const bool needs_baseline =
        std::any_of(schemes.begin(), schemes.end(), [](Scheme s) { return !is_encoder_scheme(s); });

    SimConfig base;
    base.trials = args.trials;
    base.seed = args.seed;
    base.noise_p = args.p;
    base.threads = args.threads;
    base.locations = args.random_locations ? LocationPolicy::uniform_random : LocationPolicy::highest_first;

    struct Point {
        std::string label;                       // u_or_eps column
        DefectModel model;
        std::optional<ComparisonFamily> family;  // per-point code for rate sweeps
    };
    std::vector<Point> points;

    std::optional<ComparisonFamily> shared_family;
    std::optional<PlbcCode> shared_code;

    auto make_family = [&](const PbchSpec& spec) { return ComparisonFamily::from_pbch(spec); };

    if (args.sweep == "rate") {
        if (args.d0_list.empty()) throw std::invalid_argument("simulate --sweep rate needs --d0-list");
        if (args.epsilon.empty()) throw std::invalid_argument("simulate --sweep rate needs --epsilon");
        const double eps = parse_rational(args.epsilon).convert_to<double>();
        CodeOptions member = opts;
        for (const auto& tok : split_list(args.d0_list)) {
            member.designed_d0 = static_cast<unsigned>(std::stoul(tok));
            member.g0_hex.clear();
            auto [code, spec] = member.resolve();
            if (!spec) throw invalid_spec_error("rate sweep requires PBCH family members");
            Point pt;
            pt.label = args.epsilon;
            pt.model = DefectModel::binomial(eps);
            pt.family = make_family(*spec);
            points.push_back(std::move(pt));
        }
    } else {
        auto [code, spec] = opts.resolve();
        if (needs_baseline) {
            if (!spec) throw invalid_spec_error("BCH baselines require a PBCH code spec");
            shared_family = make_family(*spec);
        } else {
            shared_code = std::move(code);
        }
        if (args.sweep == "u") {
            if (args.from < 0 || args.to < args.from) throw std::invalid_argument("simulate --sweep u needs --from/--to");
            for (long u = args.from; u <= args.to; u += std::max(1l, args.step))
                points.push_back({std::to_string(u), DefectModel::fixed(static_cast<std::size_t>(u)), std::nullopt});
        } else if (args.sweep == "epsilon") {
            if (args.eps_list.empty()) throw std::invalid_argument("simulate --sweep epsilon needs --eps-list");
            for (const auto& tok : split_list(args.eps_list))
                points.push_back({tok, DefectModel::binomial(parse_rational(tok).convert_to<double>()), std::nullopt});
        } else if (args.sweep.empty()) {
            if (args.fixed_u >= 0)
                points.push_back({std::to_string(args.fixed_u),
                                  DefectModel::fixed(static_cast<std::size_t>(args.fixed_u)), std::nullopt});
            else if (!args.epsilon.empty())
                points.push_back({args.epsilon,
                                  DefectModel::binomial(parse_rational(args.epsilon).convert_to<double>()),
                                  std::nullopt});
            else
                throw std::invalid_argument("simulate: give --sweep, --u, or --epsilon");
        } else {
            throw std::invalid_argument("simulate: unknown sweep axis '" + args.sweep + "'");
        }
    }

    std::ostream& os = out.stream();
    os << sim_csv_header() << "\n";

    std::ofstream rank_file;
    if (!args.rank_csv.empty()) {
        rank_file.open(args.rank_csv);
        if (!rank_file) throw std::invalid_argument("cannot open rank CSV file");
        rank_file << "u_or_eps,deficiency,count,probability\n";
    }

    for (const auto& pt : points) {
        const ComparisonFamily* family = pt.family ? &*pt.family : (shared_family ? &*shared_family : nullptr);
        const PlbcCode& code = family ? family->code : *shared_code;
        SimConfig cfg = base;
        cfg.defects = pt.model;

        if (family) {
            const auto reports = run_decoding_comparison(*family, schemes, cfg);
            for (std::size_t i = 0; i < schemes.size(); ++i)
                os << sim_csv_row(schemes[i], code, pt.label, reports[i]) << "\n";
        } else {
            for (Scheme scheme : schemes) {
                cfg.scheme = scheme;
                cfg.track_rank = !args.rank_csv.empty() && scheme == schemes.front() &&
                                 pt.model.kind == DefectModel::Kind::fixed_u;
                const SimReport rep = run_masking_trials(code, cfg);
                os << sim_csv_row(scheme, code, pt.label, rep) << "\n";
                if (cfg.track_rank)
                    for (const auto& [j, c] : rep.deficiency_counts)
                        rank_file << pt.label << ',' << j << ',' << c << ','
                                  << fmt_double(static_cast<double>(c) / static_cast<double>(rep.trials)) << "\n";
            }
        }
    }
    return 0;
}

struct BoundArgs {
    long u = -1;
    long from = -1, to = -1;
    long step = 1;
    std::string wd_source = "auto";  // auto|exhaustive|macwilliams|approx
    std::string wd_path;
    std::string save_wd;
    std::string mixture;
};

WeightDistribution resolve_wd(const PlbcCode& code, const BoundArgs& args) {
    if (!args.wd_path.empty()) {
        std::ifstream in(args.wd_path);
        if (!in) throw std::invalid_argument("cannot open weight distribution file '" + args.wd_path + "'");
        json j;
        in >> j;
        WeightDistribution wd = weight_distribution_from_json(j);
        if (wd.n != code.n) throw std::invalid_argument("weight distribution length does not match the code");
        return wd;
    }
    const std::size_t dual_dim = code.n - code.l;
    if (args.wd_source == "exhaustive" || (args.wd_source == "auto" && dual_dim <= kExhaustiveDimLimit)) {
        if (dual_dim > kExhaustiveDimLimit)
            throw unsupported_computation(
                "bound: dual dimension " + std::to_string(dual_dim) + " exceeds the exhaustive threshold " +
                std::to_string(kExhaustiveDimLimit) + "; use --wd-source macwilliams or --wd-source approx");
        return weight_distribution_exhaustive(null_space_basis(code.g0));
    }
    if (args.wd_source == "macwilliams" || (args.wd_source == "auto" && code.l <= kExhaustiveDimLimit)) {
        if (code.l > kExhaustiveDimLimit)
            throw unsupported_computation("bound: masking dimension " + std::to_string(code.l) +
                                          " exceeds the exhaustive threshold " +
                                          std::to_string(kExhaustiveDimLimit) + "; use --wd-source approx");
        return macwilliams_transform(weight_distribution_exhaustive(code.g0));
    }
    if (args.wd_source == "approx") return weight_distribution_approx(code.n, code.n - code.l, code.d0);
    if (args.wd_source == "auto")
        throw unsupported_computation("bound: both enumeration routes exceed the threshold " +
                                      std::to_string(kExhaustiveDimLimit) +
                                      "; pass --wd-source approx to use the binomial approximation");
    throw std::invalid_argument("bound: unknown --wd-source '" + args.wd_source + "'");
}

int cmd_bound(const CodeOptions& opts, const BoundArgs& args, OutputOption& out) {
    auto [code, spec] = opts.resolve();
    const WeightDistribution wd = resolve_wd(code, args);
    if (!args.save_wd.empty()) {
        std::ofstream f(args.save_wd);
        if (!f) throw std::invalid_argument("cannot write weight distribution file");
        f << weight_distribution_to_json(wd).dump(2) << "\n";
    }

    std::ostream& os = out.stream();
    if (!args.mixture.empty()) {
        const Rational eps = parse_rational(args.mixture);
        os << mixture_csv_header() << "\n";
        os << mixture_csv_row(args.mixture, binomial_mixture_bound(wd, eps, code.d0)) << "\n";
        return 0;
    }

    std::vector<std::size_t> us;
    if (args.u >= 0) us.push_back(static_cast<std::size_t>(args.u));
    if (args.from >= 0 && args.to >= args.from)
        for (long u = args.from; u <= args.to; u += std::max(1l, args.step)) us.push_back(static_cast<std::size_t>(u));
    if (us.empty()) throw std::invalid_argument("bound: give --u or --from/--to");

    os << bound_csv_header() << "\n";
    for (std::size_t u : us) os << bound_csv_row(masking_failure_piecewise(wd, u, code.d0)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partitioned linear block codes for memories with stuck-at defects"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a code and print its parameters");
    CodeOptions construct_code;
    construct_code.attach(construct, true);
    std::string save_spec;
    construct->add_option("--save-spec", save_spec, "write the code-spec JSON to this path");
    OutputOption construct_out;
    construct_out.attach(construct);

    // encode
    auto* encode = app.add_subcommand("encode", "encode a message against a defect pattern");
    CodeOptions encode_code;
    encode_code.attach(encode, true);
    std::string scheme_name = "two-step", w_bits, defect_text;
    bool encode_random_locations = false;
    std::uint64_t encode_seed = 1;
    encode->add_option("--scheme", scheme_name, "optimal | one-step | two-step");
    encode->add_option("--w", w_bits, "message bits, index 0 first")->required();
    encode->add_option("--defects", defect_text, "defect list \"index:value ...\" (empty = none)");
    encode->add_flag("--random-locations", encode_random_locations, "pick masked locations uniformly at random");
    encode->add_option("--seed", encode_seed, "seed for --random-locations");
    OutputOption encode_out;
    encode_out.attach(encode);

    // decode
    auto* decode = app.add_subcommand("decode", "decode a received word");
    CodeOptions decode_code;
    decode_code.attach(decode, true);
    std::string y_bits;
    bool pcc = false;
    decode->add_option("--y", y_bits, "received bits, index 0 first")->required();
    decode->add_flag("--pcc", pcc, "use the cyclic-code decoder (requires a PBCH spec)");
    OutputOption decode_out;
    decode_out.attach(decode);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo failure-rate sweeps (CSV)");
    CodeOptions sim_code;
    sim_code.attach(simulate, true);
    SimulateArgs sim_args;
    simulate->add_option("--sweep", sim_args.sweep, "u | epsilon | rate");
    simulate->add_option("--from", sim_args.from, "sweep start (u sweep)");
    simulate->add_option("--to", sim_args.to, "sweep end, inclusive (u sweep)");
    simulate->add_option("--step", sim_args.step, "sweep stride");
    simulate->add_option("--u", sim_args.fixed_u, "fixed defect count (no sweep)");
    simulate->add_option("--epsilon", sim_args.epsilon, "defect probability (rational or decimal)");
    simulate->add_option("--eps-list", sim_args.eps_list, "comma-separated epsilon sweep points");
    simulate->add_option("--d0-list", sim_args.d0_list, "comma-separated designed d0 values (rate sweep)");
    simulate->add_option("--schemes", sim_args.schemes,
                         "comma-separated: optimal,one-step,two-step,normal-bch,erasure-bch");
    simulate->add_option("--trials", sim_args.trials, "trials per point");
    simulate->add_option("--seed", sim_args.seed, "RNG seed");
    simulate->add_option("--p", sim_args.p, "additive error probability");
    simulate->add_option("--threads", sim_args.threads, "worker threads (result is thread-count independent)");
    simulate->add_flag("--random-locations", sim_args.random_locations,
                       "pick masked locations uniformly instead of highest-first");
    simulate->add_option("--rank-csv", sim_args.rank_csv, "also write per-deficiency counts to this CSV");
    OutputOption sim_out;
    sim_out.attach(simulate);

    // bound
    auto* bound = app.add_subcommand("bound", "analytic masking-failure bounds and estimates (CSV)");
    CodeOptions bound_code;
    bound_code.attach(bound, true);
    BoundArgs bound_args;
    bound->add_option("--u", bound_args.u, "single defect count");
    bound->add_option("--from", bound_args.from, "defect-count sweep start");
    bound->add_option("--to", bound_args.to, "defect-count sweep end, inclusive");
    bound->add_option("--step", bound_args.step, "sweep stride");
    bound->add_option("--wd-source", bound_args.wd_source, "auto | exhaustive | macwilliams | approx");
    bound->add_option("--wd", bound_args.wd_path, "load the weight distribution from JSON");
    bound->add_option("--save-wd", bound_args.save_wd, "save the weight distribution used");
    bound->add_option("--mixture", bound_args.mixture, "binomial mixture bound at this epsilon");
    OutputOption bound_out;
    bound_out.attach(bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(construct_code, save_spec, construct_out);
        if (encode->parsed())
            return cmd_encode(encode_code, scheme_name, w_bits, defect_text, encode_random_locations, encode_seed,
                              encode_out);
        if (decode->parsed()) return cmd_decode(decode_code, y_bits, pcc, decode_out);
        if (simulate->parsed()) return cmd_simulate(sim_code, sim_args, sim_out);
        if (bound->parsed()) return cmd_bound(bound_code, bound_args, bound_out);
    } catch (const decode_failure& e) {
        std::cerr << "decode failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
