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

#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "plbc/bounds.hpp"
#include "plbc/codec.hpp"
#include "plbc/sim.hpp"
#include "plbc/weights.hpp"

namespace plbc {

using json = nlohmann::json;

/// Fixed "%.10g" rendering used by every CSV column holding a float, so that
/// identical runs emit identical bytes.
inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

/// Accepts "a/b", decimal ("0.25"), or integer ("1") forms.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    const std::string ipart = dot == 0 ? "0" : text.substr(0, dot);
    const std::string fpart = text.substr(dot + 1);
    if (fpart.empty()) return Rational(BigInt(ipart));
    for (char c : fpart)
        if (c < '0' || c > '9') throw std::invalid_argument("parse_rational: bad fraction digits in '" + text + "'");
    BigInt den = 1;
    for (std::size_t i = 0; i < fpart.size(); ++i) den *= 10;
    const bool neg = !ipart.empty() && ipart[0] == '-';
    const BigInt whole(ipart);
    const BigInt frac(fpart);
    return Rational(whole * den + (neg ? -frac : frac), den);
}

// ---------------------------------------------------------------------------
// Code-spec files

/// On-disk description of a code: either nested generator polynomials
/// ("pbch") or explicit generator rows ("plbc", with an optional caller
/// asserted d0 for out-of-range dimensions).
struct CodeSpecFile {
    std::optional<PbchSpec> pbch;
    std::optional<std::pair<BitMatrix, BitMatrix>> plbc_rows;
    std::optional<std::size_t> user_d0;

    PlbcCode build() const {
        if (pbch) return pbch_build(*pbch);
        if (plbc_rows) return plbc_from_generators(plbc_rows->first, plbc_rows->second, user_d0);
        throw invalid_spec_error("code spec: neither pbch nor plbc populated");
    }

    static CodeSpecFile parse(const json& j) {
        CodeSpecFile spec;
        const std::string type = j.at("type").get<std::string>();
        if (type == "pbch") {
            const std::size_t n = j.at("n").get<std::size_t>();
            unsigned m = 0;
            if (j.contains("m")) {
                m = j.at("m").get<unsigned>();
            } else {
                while ((std::size_t(1) << (m + 1)) - 1 <= n) ++m;
                if ((std::size_t(1) << m) - 1 != n) throw invalid_spec_error("code spec: n is not 2^m - 1");
            }
            const BinaryPolynomial prim = j.contains("primitive")
                                              ? BinaryPolynomial::from_hex(j.at("primitive").get<std::string>())
                                              : FieldGF2m::default_primitive(m);
            spec.pbch = PbchSpec{n, FieldGF2m(m, prim),
                                 BinaryPolynomial::from_hex(j.at("g1").get<std::string>()),
                                 BinaryPolynomial::from_hex(j.at("g0").get<std::string>())};
        } else if (type == "plbc") {
            BitMatrix g1(0, 0), g0(0, 0);
            for (const auto& row : j.at("g1_rows")) g1.append_row(BitVector::from_string(row.get<std::string>()));
            for (const auto& row : j.at("g0_rows")) g0.append_row(BitVector::from_string(row.get<std::string>()));
            spec.plbc_rows = std::make_pair(std::move(g1), std::move(g0));
            if (j.contains("d0")) spec.user_d0 = j.at("d0").get<std::size_t>();
        } else {
            throw invalid_spec_error("code spec: unknown type '" + type + "'");
        }
        return spec;
    }

    static CodeSpecFile load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open code spec file '" + path + "'");
        json j;
        in >> j;
        return parse(j);
    }

    json to_json() const {
        json j;
        if (pbch) {
            j["type"] = "pbch";
            j["n"] = pbch->n;
            j["m"] = pbch->field.m();
            j["primitive"] = pbch->field.primitive_polynomial().to_hex();
            j["g1"] = pbch->g1.to_hex();
            j["g0"] = pbch->g0.to_hex();
        } else if (plbc_rows) {
            j["type"] = "plbc";
            json g1 = json::array(), g0 = json::array();
            for (std::size_t i = 0; i < plbc_rows->first.rows(); ++i) g1.push_back(plbc_rows->first.row(i).to_string());
            for (std::size_t i = 0; i < plbc_rows->second.rows(); ++i)
                g0.push_back(plbc_rows->second.row(i).to_string());
            j["g1_rows"] = std::move(g1);
            j["g0_rows"] = std::move(g0);
            if (user_d0) j["d0"] = *user_d0;
        }
        return j;
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot write code spec file '" + path + "'");
        out << to_json().dump(2) << "\n";
    }
};

// ---------------------------------------------------------------------------
// Weight-distribution files

inline json weight_distribution_to_json(const WeightDistribution& wd) {
    json j;
    j["n"] = wd.n;
    j["dim"] = wd.dim;
    json counts = json::array();
    for (const auto& c : wd.counts) counts.push_back(c.str());
    j["counts"] = std::move(counts);
    j["provenance"] = to_string(wd.provenance);
    return j;
}

inline WeightDistribution weight_distribution_from_json(const json& j) {
    WeightDistribution wd;
    wd.n = j.at("n").get<std::size_t>();
    wd.dim = j.at("dim").get<std::size_t>();
    for (const auto& c : j.at("counts")) wd.counts.emplace_back(c.get<std::string>());
    if (wd.counts.size() != wd.n + 1)
        throw std::invalid_argument("weight distribution: counts length != n + 1");
    const std::string prov = j.at("provenance").get<std::string>();
    if (prov == "exhaustive")
        wd.provenance = WdProvenance::exhaustive;
    else if (prov == "macwilliams")
        wd.provenance = WdProvenance::macwilliams;
    else if (prov == "approx")
        wd.provenance = WdProvenance::approx;
    else
        throw std::invalid_argument("weight distribution: unknown provenance '" + prov + "'");
    return wd;
}

// ---------------------------------------------------------------------------
// CSV rows

inline std::string sim_csv_header() { return "scheme,n,k,l,u_or_eps,trials,failures,rate,ci_low,ci_high,seed"; }

inline std::string sim_csv_row(Scheme scheme, const PlbcCode& code, const std::string& u_or_eps,
                               const SimReport& rep) {
    std::ostringstream os;
    os << to_string(scheme) << ',' << code.n << ',' << code.k << ',' << code.l << ',' << u_or_eps << ','
       << rep.trials << ',' << rep.failures << ',' << fmt_double(rep.rate) << ',' << fmt_double(rep.ci_low) << ','
       << fmt_double(rep.ci_high) << ',' << rep.seed;
    return os.str();
}

inline std::string bound_csv_header() { return "u,kind,value_num,value_den,value_float"; }

inline std::string bound_csv_row(const BoundReport& rep) {
    std::ostringstream os;
    os << rep.u << ',' << to_string(rep.kind) << ',' << numerator(rep.value).str() << ','
       << denominator(rep.value).str() << ',' << fmt_double(rep.value_as_double());
    return os.str();
}

inline std::string mixture_csv_header() { return "epsilon,kind,value_num,value_den,value_float"; }

inline std::string mixture_csv_row(const std::string& epsilon, const Rational& value) {
    std::ostringstream os;
    os << epsilon << ",upper-bound," << numerator(value).str() << ',' << denominator(value).str() << ','
       << fmt_double(value.convert_to<double>());
    return os.str();
}

inline std::string encode_csv_row(const EncodeResult& res) {
    std::ostringstream os;
    os << res.codeword.to_string() << ',' << res.d.to_string() << ',' << res.unmasked << ','
       << to_string(res.step);
    return os.str();
}

}  // namespace plbc
