// Copyright 2026 The pqsvt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pqsvt/io.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace pqsvt::io {

namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
    s = trim(s);
    if (s.empty()) return false;
    // from_chars rejects a leading '+'.
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

double require_double(std::string_view s, std::string_view what) {
    double v = 0.0;
    if (!parse_double(s, v)) throw std::invalid_argument(fmt::format("parse_target: bad {} '{}'", what, s));
    return v;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

template <class F>
auto with_json_errors(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON document: ") + e.what());
    }
}

}  // namespace

std::vector<double> read_samples_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open samples file: " + path.string());
    std::vector<double> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') continue;
        const auto comma = view.rfind(',');
        const std::string_view field = comma == std::string_view::npos ? view : view.substr(comma + 1);
        double v = 0.0;
        if (!parse_double(field, v)) {
            if (out.empty() && line_no == 1) continue;  // header
            throw std::invalid_argument(fmt::format("{}:{}: not a number: '{}'", path.string(), line_no, field));
        }
        out.push_back(v);
    }
    return out;
}

TargetSpec parse_target(std::string_view text, int n) {
    const auto colon = text.find(':');
    const std::string_view kind = text.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    TargetSpec spec;
    spec.n = n;
    if (kind == "power") {
        spec.kind = PowerTarget{require_double(arg, "alpha")};
    } else if (kind == "log") {
        if (!arg.empty()) throw std::invalid_argument("parse_target: log takes no argument");
        spec.kind = LogTarget{};
    } else if (kind == "bspline") {
        const double m = require_double(arg, "B-spline order");
        if (m != std::floor(m)) throw std::invalid_argument("parse_target: B-spline order must be an integer");
        spec.kind = BsplineTarget{static_cast<int>(m)};
    } else if (kind == "kaiser") {
        spec.kind = KaiserTarget{require_double(arg, "beta")};
    } else if (kind == "custom") {
        if (arg.empty()) throw std::invalid_argument("parse_target: custom needs a file path");
        spec.kind = CustomTarget{read_samples_csv(std::filesystem::path(std::string(arg)))};
    } else {
        throw std::invalid_argument(fmt::format("parse_target: unknown target kind '{}'", kind));
    }
    spec.validate();
    return spec;
}

std::string to_json(const TargetSpec& spec) {
    json j;
    j["kind"] = spec.kind_name();
    j["n"] = spec.n;
    std::visit(Overloaded{
                   [&](const PowerTarget& p) { j["alpha"] = p.alpha; },
                   [&](const LogTarget&) {},
                   [&](const BsplineTarget& b) { j["m"] = b.m; },
                   [&](const KaiserTarget& k) { j["beta"] = k.beta; },
                   [&](const CustomTarget& c) { j["samples"] = c.samples; },
               },
               spec.kind);
    return j.dump(2);
}

std::string to_json(const SegmentPlan& plan) {
    json segments = json::array();
    for (const auto& s : plan.segments) {
        segments.push_back({{"start", s.start},
                            {"length", s.length},
                            {"degree", s.degree},
                            {"coeffs", s.coeffs},
                            {"fit_error", s.fit_error}});
    }
    json j;
    j["n"] = plan.n;
    j["segments"] = std::move(segments);
    j["pmax"] = plan.pmax;
    return j.dump(2);
}

std::string to_json(const PhaseFactorSet& phases) {
    json j;
    j["d"] = phases.d;
    j["phases"] = phases.phases;
    return j.dump(2);
}

std::string to_json(const PrepReport& r) {
    json j;
    j["fidelity"] = r.fidelity;
    j["success_amplitude"] = r.success_amplitude;
    j["aa_rounds"] = r.aa_rounds;
    j["post_aa_success"] = r.post_aa_success;
    j["pmax_sqrtN"] = r.pmax_sqrtN;
    j["inefficient"] = r.inefficient;
    return j.dump(2);
}

std::string to_json(const ResourceEstimate& e) {
    json j;
    j["toffoli_qsvt"] = e.toffoli_qsvt;
    j["toffoli_per_be"] = e.toffoli_per_be;
    j["toffoli_total_with_aa"] = e.toffoli_total_with_aa;
    j["qubits_total"] = e.qubits_total;
    j["parameters"] = {{"n", e.n},
                       {"d", e.d},
                       {"S", e.S},
                       {"l_max", e.l_max},
                       {"log_inv_eps", e.log_inv_eps},
                       {"aa_rounds", e.aa_rounds},
                       {"unique_sizes", e.unique_sizes},
                       {"variant", e.variant.name()}};
    return j.dump(2);
}

SegmentPlan plan_from_json(std::string_view text) {
    const json j = parse_json(text);
    SegmentPlan plan = with_json_errors([&] {
        SegmentPlan p;
        p.n = j.at("n").get<int>();
        p.pmax = j.at("pmax").get<double>();
        for (const auto& s : j.at("segments")) {
            Segment seg;
            seg.start = s.at("start").get<std::int64_t>();
            seg.length = s.at("length").get<std::int64_t>();
            seg.coeffs = s.at("coeffs").get<std::vector<double>>();
            seg.degree = s.contains("degree") ? s.at("degree").get<int>() : static_cast<int>(seg.coeffs.size()) - 1;
            seg.fit_error = s.contains("fit_error") ? s.at("fit_error").get<double>() : 0.0;
            p.segments.push_back(std::move(seg));
        }
        return p;
    });
    plan.validate();
    return plan;
}

PhaseFactorSet phases_from_json(std::string_view text) {
    const json j = parse_json(text);
    return with_json_errors([&] {
        PhaseFactorSet set;
        set.d = j.at("d").get<int>();
        set.phases = j.at("phases").get<std::vector<std::vector<double>>>();
        for (const auto& v : set.phases) {
            if (v.size() != 2 * static_cast<std::size_t>(set.d) + 1) {
                throw std::invalid_argument("phases_from_json: every phase vector needs 2d + 1 angles");
            }
        }
        return set;
    });
}

PrepReport report_from_json(std::string_view text) {
    const json j = parse_json(text);
    return with_json_errors([&] {
        PrepReport r;
        r.fidelity = j.at("fidelity").get<double>();
        r.success_amplitude = j.at("success_amplitude").get<double>();
        r.aa_rounds = j.at("aa_rounds").get<int>();
        r.post_aa_success = j.at("post_aa_success").get<double>();
        r.pmax_sqrtN = j.at("pmax_sqrtN").get<double>();
        r.inefficient = j.at("inefficient").get<bool>();
        return r;
    });
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_prep_csv_header(std::ostream& os) {
    os << "target,n,degree,S,l_max,pmax,fidelity,success_amplitude,aa_rounds,post_aa_success,pmax_sqrtN\n";
}

void write_prep_csv_row(std::ostream& os, const TargetSpec& spec, int degree, const SegmentPlan& plan,
                        const PrepReport& r) {
    os << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", spec.kind_name(), spec.n, degree, plan.segment_count(),
                      plan.l_max(), plan.pmax, r.fidelity, r.success_amplitude, r.aa_rounds, r.post_aa_success,
                      r.pmax_sqrtN);
}

}  // namespace pqsvt::io
