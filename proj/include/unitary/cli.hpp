/*
   Copyright 2026 The unitary-charmap Authors

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

#ifndef UNITARY_CLI_HPP
#define UNITARY_CLI_HPP

// Command front end: tables, decompositions and verification reports as JSON, CSV or text.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bruteforce.hpp"
#include "json.hpp"
#include "reptables.hpp"

namespace unitary::cli {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

enum class Format { json, csv, pretty };

struct RunConfig {
    std::string command;
    std::string target;  // decompose / verify sub-target
    int n = 1;
    int q = 2;
    int m = 0;   // 0: same as n
    int r = -1;  // -1: floor(m / 2)
    Format format = Format::json;
    bool allow_even_q = false;
    long max_group_order = 100000;
    unsigned parallel = 1;
};

class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"orbits", "classes", "chartable", "degrees", "decompose", "verify", "bruteforce"};
    return c;
}

inline const std::vector<std::string>& decompose_targets() {
    static const std::vector<std::string> t{"gelfand-graev", "sp-induction", "model"};
    return t;
}

inline const std::vector<std::string>& verify_targets() {
    static const std::vector<std::string> t{"orthogonality", "class-equation", "degree-sum", "even-sum", "sameprod",
                                            "dl",            "unsym",          "fs",         "divsum",   "all"};
    return t;
}

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "pretty") return Format::pretty;
    throw ConfigError("unknown format: " + s);
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline Json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

inline Json rational_json(const Rational& v) { return Json::array({integer_json(v.get_num()), integer_json(v.get_den())}); }

inline Json orbit_json(const OrbitId& o) {
    return Json{{"kind", to_string(o.kind)}, {"q", o.q}, {"size", o.size}, {"residue", o.residue}};
}

inline Json mp_json(const MultiPartition& mu) {
    Json entries = Json::array();
    for (const auto& [o, p] : mu.entries()) entries.push_back(Json{{"orbit", orbit_json(o)}, {"partition", p.parts()}});
    return Json{{"label", mu.to_string()}, {"entries", std::move(entries)}};
}

inline Json cyclotomic_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& r : c.coefficients()) coeffs.push_back(rational_json(r));
    return Json{{"N", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

inline std::string fixed(double x) {
    double r = std::round(x * 1e10) / 1e10;
    if (r == 0) r = 0;  // no negative zero
    std::ostringstream os;
    os << std::setprecision(10) << r;
    return os.str();
}

/// Complex rendering rounded to 1e-10; used only by the pretty format.
inline std::string approx(const Cyclotomic& c) {
    if (c.is_rational()) return c.rational_value().get_str();
    const std::complex<double> z = c.to_complex();
    const std::string re = fixed(z.real()), im = fixed(std::abs(z.imag()));
    if (im == "0") return re;
    return re + (z.imag() < 0 ? "-" : "+") + im + "i";
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << "\n";
}

/// Column-aligned text table.
inline void text_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) line += "  ";
            line += r[i] + std::string(i + 1 < r.size() ? width[i] - r[i].size() : 0, ' ');
        }
        out << line << "\n";
    }
}

inline Json header(const RunConfig& cfg) {
    Json j{{"schema", kSchema}, {"command", cfg.command}};
    if (!cfg.target.empty()) j["target"] = cfg.target;
    j["q"] = cfg.q;
    return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Validation

inline int effective_m(const RunConfig& cfg) { return cfg.m > 0 ? cfg.m : cfg.n; }
inline int effective_r(const RunConfig& cfg) { return cfg.r >= 0 ? cfg.r : effective_m(cfg) / 2; }

inline void validate(const RunConfig& cfg) {
    const auto& cmds = commands();
    if (std::find(cmds.begin(), cmds.end(), cfg.command) == cmds.end()) throw ConfigError("unknown command: " + cfg.command);
    if (!is_prime_power(cfg.q)) throw ConfigError("q must be a prime power >= 2");
    if (cfg.n < 1 || cfg.n > 8) throw ConfigError("n must lie in [1, 8]");
    if (cfg.m < 0 || cfg.m > 8) throw ConfigError("m must lie in [1, 8]");
    if (cfg.r < -1 || cfg.r > 4) throw ConfigError("r must lie in [0, 4]");
    if (cfg.max_group_order < 1) throw ConfigError("max-group-order must be positive");
    if (cfg.parallel < 1 || cfg.parallel > 256) throw ConfigError("parallel must lie in [1, 256]");
    auto need_target = [&](const std::vector<std::string>& allowed) {
        if (std::find(allowed.begin(), allowed.end(), cfg.target) == allowed.end())
            throw ConfigError("unknown " + cfg.command + " target: '" + cfg.target + "'");
    };
    if (cfg.command == "decompose")
        need_target(decompose_targets());
    else if (cfg.command == "verify")
        need_target(verify_targets());
    else if (!cfg.target.empty())
        throw ConfigError(cfg.command + " takes no target");
    // Orbit enumeration walks M_k for k up to `walk`; character tables live in Q(zeta_N) for size `table`.
    const int m = effective_m(cfg), r = effective_r(cfg);
    const bool verify = cfg.command == "verify";
    int walk = std::max(cfg.n, m), table = 0;
    if (cfg.command == "chartable" || cfg.command == "bruteforce") table = cfg.n;
    if (cfg.command == "decompose") table = cfg.target == "sp-induction" ? 2 * r : m;
    if (cfg.command == "decompose" && cfg.target == "sp-induction") walk = std::max(walk, 2 * r);
    if (verify && (cfg.target == "even-sum" || cfg.target == "all")) walk = std::max(walk, 2 * m);
    for (const char* t : {"orthogonality", "sameprod", "dl", "fs", "all"})
        if (verify && cfg.target == t) table = cfg.n;
    if (verify && (cfg.target == "degree-sum" || cfg.target == "all")) table = std::max(table, std::min(m, 3));
    if (cyclic_order(cfg.q, walk) > 2000000) throw ConfigError("q^n too large for exact enumeration");
    if (table >= 1 && conductor_for(cfg.q, table) > 200000) throw ConfigError("character field conductor too large");
}

// ---------------------------------------------------------------------------
// Verification

struct CheckResult {
    std::string name;
    enum class Status { pass, fail, skip } status = Status::pass;
    Json detail = Json::object();

    bool failed() const { return status == Status::fail; }
    const char* status_string() const { return status == Status::pass ? "PASS" : status == Status::fail ? "FAIL" : "SKIP"; }
};

/// Shared state for one run: contexts sized on demand and the brute group if any.
class Session {
   public:
    explicit Session(const RunConfig& cfg) : cfg_(cfg) {}

    Context& context(int n) {
        auto& slot = contexts_[n];
        if (!slot) slot = std::make_unique<Context>(cfg_.q, n, cfg_.parallel);
        return *slot;
    }

    bool brute_available() const { return brute_supported(cfg_.n, cfg_.q, true) && unitary_group_order(cfg_.n, cfg_.q) <= cfg_.max_group_order; }

    const BruteGroup& group() {
        if (!group_) group_ = std::make_unique<BruteGroup>(enumerate_group(cfg_.n, cfg_.q, BruteOptions{cfg_.max_group_order, true}));
        return *group_;
    }

    const RunConfig& config() const { return cfg_; }

   private:
    RunConfig cfg_;
    std::map<int, std::unique_ptr<Context>> contexts_;
    std::unique_ptr<BruteGroup> group_;
};

namespace checks {

inline CheckResult orthogonality(Session& s) {
    const int n = s.config().n, q = s.config().q;
    CheckResult res{"orthogonality"};
    Context& ctx = s.context(n);
    const auto& t = ctx.char_table(n);
    const auto& rows = enumerate_mp(q, OrbitKind::theta, n);
    const auto& cols = enumerate_mp(q, OrbitKind::phi, n);
    std::vector<Rational> w;
    for (const auto& mu : cols) w.push_back(ratio(1, ctx.centralizer(mu)));
    long pairs = 0;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t k = i; k < t.size(); ++k) {
            RootAccumulator acc(ctx.N());
            for (size_t j = 0; j < cols.size(); ++j) acc.add(t[i][j] * t[k][j].conj(), w[j]);
            const Cyclotomic v = acc.finish();
            ++pairs;
            if (!(v == ctx.scalar(i == k ? 1 : 0)) && !res.failed()) {
                res.status = CheckResult::Status::fail;
                res.detail["first_failure"] = Json{{"lambda", rows[i].to_string()}, {"nu", rows[k].to_string()}, {"value", detail::cyclotomic_json(v)}};
            }
        }
    res.detail["n"] = n;
    res.detail["characters"] = rows.size();
    res.detail["pairs"] = pairs;
    return res;
}

inline CheckResult class_equation(Session& s) {
    const int n = s.config().n, q = s.config().q;
    CheckResult res{"class-equation"};
    Json sizes = Json::array();
    for (int k = 1; k <= n; ++k) {
        Integer total = 0;
        for (const auto& mu : enumerate_mp(q, OrbitKind::phi, k)) total += class_size(mu);
        const Integer order = unitary_group_order(k, q);
        if (total != order) res.status = CheckResult::Status::fail;
        sizes.push_back(Json{{"n", k}, {"class_sizes_total", detail::integer_json(total)}, {"order", detail::integer_json(order)}});
    }
    res.detail["sizes"] = std::move(sizes);
    if (s.brute_available()) {
        auto census = class_census(s.group());
        long mismatched = static_cast<long>(enumerate_mp(q, OrbitKind::phi, n).size()) - static_cast<long>(census.size());
        for (const auto& [mu, size] : census)
            if (Integer(size) != class_size(mu)) ++mismatched;
        if (mismatched) res.status = CheckResult::Status::fail;
        res.detail["brute"] = Json{{"classes", census.size()}, {"mismatched", mismatched}};
    }
    return res;
}

inline CheckResult degree_sum_check(Session& s) {
    const int m = effective_m(s.config()), q = s.config().q;
    CheckResult res{"degree-sum"};
    const Integer closed = degree_sum_closed(m, q), hook = degree_sum(q, m), delta = degree_sum_delta(q, m);
    res.detail["m"] = m;
    res.detail["value"] = detail::integer_json(hook);
    res.detail["closed_form"] = detail::integer_json(closed);
    res.detail["delta_route"] = detail::integer_json(delta);
    bool ok = hook == closed && delta == closed;
    if (m <= 3) {
        Context& ctx = s.context(m);
        Cyclotomic t = ctx.zero();
        for (const auto& row : ctx.char_table(m)) t += row[0];
        res.detail["table_route"] = detail::cyclotomic_json(t);
        ok = ok && t == ctx.scalar(Rational(closed));
    }
    if (!ok) res.status = CheckResult::Status::fail;
    return res;
}

inline CheckResult even_sum(Session& s) {
    const int m = effective_m(s.config()), q = s.config().q;
    CheckResult res{"even-sum"};
    const Integer v = even_degree_sum(q, m), closed = even_degree_sum_closed(m, q);
    const Integer index = unitary_group_order(2 * m, q) / symplectic_group_order(m, q);
    res.detail["size"] = 2 * m;
    res.detail["value"] = detail::integer_json(v);
    res.detail["closed_form"] = detail::integer_json(closed);
    res.detail["symplectic_index"] = detail::integer_json(index);
    if (v != closed || closed != index) res.status = CheckResult::Status::fail;
    return res;
}

inline CheckResult sameprod(Session& s) {
    const int n = s.config().n, q = s.config().q;
    CheckResult res{"sameprod"};
    Context& ctx = s.context(n);
    long pairs = 0;
    auto basis = [&](const MultiPartition& mu) {
        SymElement e = ctx.element(static_cast<int>(mu.size()), Basis::pi);
        e.add(mu, Rational(1));
        return e;
    };
    for (int a = 1; a < n; ++a)
        for (int b = 1; a + b <= n; ++b)
            for (const auto& x : enumerate_mp(q, OrbitKind::phi, a))
                for (const auto& y : enumerate_mp(q, OrbitKind::phi, b)) {
                    const SymElement ex = basis(x), ey = basis(y);
                    const SymElement st = star_product(ctx, ex, ey);
                    bool ok = st == circ_product(ctx, ex, ey);
                    // ch of the star product is the product of the images.
                    const SymElement px = convert(ctx, ex, Basis::p_phi), py = convert(ctx, ey, Basis::p_phi);
                    SymElement rhs = ctx.element(a + b, Basis::p_phi);
                    for (const auto& [u, cu] : px.coeffs)
                        for (const auto& [v, cv] : py.coeffs) rhs.add(concatenate(u, v), cu * cv);
                    ok = ok && convert(ctx, st, Basis::p_phi) == rhs;
                    ++pairs;
                    if (!ok && !res.failed()) {
                        res.status = CheckResult::Status::fail;
                        res.detail["first_failure"] = Json{{"mu", x.to_string()}, {"nu", y.to_string()}};
                    }
                }
    res.detail["max_total"] = n;
    res.detail["pairs"] = pairs;
    return res;
}

inline CheckResult dl(Session& s) {
    const int n = s.config().n, q = s.config().q;
    CheckResult res{"dl"};
    Context& ctx = s.context(n);
    long labels = 0;
    for (int k = 1; k <= n; ++k)
        for (const auto& nu : partitions_of(k)) {
            std::vector<long long> theta(nu.length(), 0);
            while (true) {
                const TorusLabel label{nu, theta};
                ++labels;
                if (!(dl_character(ctx, label, DlPath::transform) == dl_character(ctx, label, DlPath::torus_sum)) && !res.failed()) {
                    res.status = CheckResult::Status::fail;
                    res.detail["first_failure"] = Json{{"nu", nu.parts()}, {"theta", theta}};
                }
                int i = 0;
                while (i < nu.length() && ++theta[i] == cyclic_order(q, nu[i])) theta[i++] = 0;
                if (i == nu.length()) break;
            }
        }
    res.detail["max_size"] = n;
    res.detail["labels"] = labels;
    return res;
}

inline CheckResult unsym(Session& s) {
    const int n = s.config().n, q = s.config().q;
    CheckResult res{"unsym"};
    const Integer expect = degree_sum(q, n);
    res.detail["degree_sum"] = detail::integer_json(expect);
    if (!s.brute_available()) {
        res.status = CheckResult::Status::skip;
        res.detail["reason"] = "no brute-force group at this size";
        return res;
    }
    const long count = symmetric_count(s.group());
    const auto stab = symmetric_stabilizers(s.group()), expected = expected_symmetric_stabilizers(n, q);
    res.detail["symmetric_count"] = count;
    Json js = Json::array(), je = Json::array();
    for (const auto& v : stab) js.push_back(detail::integer_json(v));
    for (const auto& v : expected) je.push_back(detail::integer_json(v));
    res.detail["stabilizers"] = std::move(js);
    res.detail["expected_stabilizers"] = std::move(je);
    if (Integer(count) != expect || stab != expected) res.status = CheckResult::Status::fail;
    return res;
}

inline CheckResult fs(Session& s) {
    const int n = s.config().n;
    CheckResult res{"fs"};
    if (!s.brute_available()) {
        res.status = CheckResult::Status::skip;
        res.detail["reason"] = "no brute-force group at this size";
        return res;
    }
    Context& ctx = s.context(n);
    const IndicatorReport r = twisted_fs(s.group(), ctx, Involution::transpose_inverse);
    long not_one = 0;
    for (const auto& [l, e] : r.indicators)
        if (!(e == ctx.scalar(1))) ++not_one;
    const long sym = symmetric_count(s.group());
    res.detail["characters"] = r.indicators.size();
    res.detail["indicators_not_one"] = not_one;
    res.detail["weighted_sum"] = detail::cyclotomic_json(r.weighted_sum);
    res.detail["symmetric_count"] = sym;
    if (not_one || !(r.weighted_sum == ctx.scalar(Rational(sym))) || r.fixed_count != sym) res.status = CheckResult::Status::fail;
    return res;
}

inline CheckResult divsum(Session& s) {
    const int top = effective_m(s.config()), q = s.config().q;
    CheckResult res{"divsum"};
    Json rows = Json::array();
    for (int m = 1; m <= top; ++m) {
        long long sum = 0;
        for (int r = 1; r <= m; ++r)
            if (m % r == 0) sum += r * orbit_count(q, r);
        const long long nm = cyclic_order(q, m);
        if (sum != nm) res.status = CheckResult::Status::fail;
        rows.push_back(Json{{"m", m}, {"sum", sum}, {"N_m", nm}});
    }
    res.detail["levels"] = std::move(rows);
    return res;
}

inline std::vector<CheckResult> run(Session& s, const std::string& target) {
    using Fn = CheckResult (*)(Session&);
    const std::vector<std::pair<std::string, Fn>> all{
        {"orthogonality", orthogonality}, {"class-equation", class_equation}, {"degree-sum", degree_sum_check},
        {"even-sum", even_sum},           {"sameprod", sameprod},             {"dl", dl},
        {"unsym", unsym},                 {"fs", fs},                         {"divsum", divsum}};
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : all)
        if (target == "all" || target == name) out.push_back(fn(s));
    return out;
}

}  // namespace checks

// ---------------------------------------------------------------------------
// Commands

namespace detail {

inline int cmd_orbits(const RunConfig& cfg, std::ostream& out) {
    const int n = cfg.n, q = cfg.q;
    if (cfg.format == Format::csv) {
        csv_row(out, {"kind", "size", "residue"});
        for (OrbitKind k : {OrbitKind::theta, OrbitKind::phi})
            for (const auto& o : enumerate_orbits(q, k, n)) csv_row(out, {to_string(k), std::to_string(o.size), std::to_string(o.residue)});
        return 0;
    }
    if (cfg.format == Format::pretty) {
        std::vector<std::vector<std::string>> rows{{"m", "N_m", "d_m"}};
        for (int m = 1; m <= n; ++m) rows.push_back({std::to_string(m), std::to_string(cyclic_order(q, m)), std::to_string(orbit_count(q, m))});
        text_table(out, rows);
        for (OrbitKind k : {OrbitKind::theta, OrbitKind::phi}) {
            out << to_string(k) << ":";
            for (const auto& o : enumerate_orbits(q, k, n)) out << " " << o.to_string();
            out << "\n";
        }
        return 0;
    }
    Json j = header(cfg);
    j["n"] = n;
    Json levels = Json::array();
    for (int m = 1; m <= n; ++m) levels.push_back(Json{{"m", m}, {"N_m", cyclic_order(q, m)}, {"d_m", orbit_count(q, m)}});
    j["levels"] = std::move(levels);
    for (OrbitKind k : {OrbitKind::theta, OrbitKind::phi}) {
        Json list = Json::array();
        for (const auto& o : enumerate_orbits(q, k, n)) list.push_back(orbit_json(o));
        j[to_string(k)] = std::move(list);
    }
    out << j.dump(2) << "\n";
    return 0;
}

inline int cmd_classes(const RunConfig& cfg, std::ostream& out) {
    const auto& cls = enumerate_mp(cfg.q, OrbitKind::phi, cfg.n);
    if (cfg.format != Format::json) {
        std::vector<std::vector<std::string>> rows{{"mu", "centralizer", "size"}};
        for (const auto& mu : cls) rows.push_back({mu.to_string(), centralizer_order(mu).get_str(), class_size(mu).get_str()});
        if (cfg.format == Format::csv)
            for (const auto& r : rows) csv_row(out, r);
        else
            text_table(out, rows);
        return 0;
    }
    Json j = header(cfg);
    j["n"] = cfg.n;
    j["order"] = integer_json(unitary_group_order(cfg.n, cfg.q));
    Json list = Json::array();
    for (const auto& mu : cls)
        list.push_back(Json{{"mu", mp_json(mu)}, {"centralizer", integer_json(centralizer_order(mu))}, {"size", integer_json(class_size(mu))}});
    j["classes"] = std::move(list);
    out << j.dump(2) << "\n";
    return 0;
}

inline int cmd_chartable(const RunConfig& cfg, Session& s, std::ostream& out) {
    Context& ctx = s.context(cfg.n);
    const auto& t = ctx.char_table(cfg.n);
    const auto& rows = enumerate_mp(cfg.q, OrbitKind::theta, cfg.n);
    const auto& cols = enumerate_mp(cfg.q, OrbitKind::phi, cfg.n);
    if (cfg.format != Format::json) {
        std::vector<std::vector<std::string>> grid{{"chi\\class"}};
        for (const auto& c : cols) grid[0].push_back(c.to_string());
        for (size_t i = 0; i < rows.size(); ++i) {
            grid.push_back({rows[i].to_string()});
            for (const auto& v : t[i]) grid.back().push_back(cfg.format == Format::csv ? v.to_string() : approx(v));
        }
        if (cfg.format == Format::csv)
            for (const auto& r : grid) csv_row(out, r);
        else
            text_table(out, grid);
        return 0;
    }
    Json j = header(cfg);
    j["n"] = cfg.n;
    j["conductor"] = ctx.conductor();
    Json jr = Json::array(), jc = Json::array(), jv = Json::array();
    for (const auto& r : rows) jr.push_back(mp_json(r));
    for (const auto& c : cols) jc.push_back(mp_json(c));
    for (const auto& row : t) {
        Json line = Json::array();
        for (const auto& v : row) line.push_back(cyclotomic_json(v));
        jv.push_back(std::move(line));
    }
    j["rows"] = std::move(jr);
    j["columns"] = std::move(jc);
    j["values"] = std::move(jv);
    out << j.dump(2) << "\n";
    return 0;
}

inline int cmd_degrees(const RunConfig& cfg, std::ostream& out) {
    const auto recs = degree_records(cfg.q, cfg.n);
    if (cfg.format != Format::json) {
        std::vector<std::vector<std::string>> rows{{"lambda", "degree", "tau", "height", "odd_conjugate"}};
        for (const auto& r : recs)
            rows.push_back({r.lambda.to_string(), r.degree.get_str(), std::to_string(r.tau), std::to_string(r.height), std::to_string(r.odd_conjugate)});
        if (cfg.format == Format::csv)
            for (const auto& r : rows) csv_row(out, r);
        else
            text_table(out, rows);
        return 0;
    }
    Json j = header(cfg);
    j["n"] = cfg.n;
    Json list = Json::array();
    for (const auto& r : recs)
        list.push_back(Json{{"lambda", mp_json(r.lambda)},
                            {"degree", integer_json(r.degree)},
                            {"degree_poly", r.degree_poly.to_string("q")},
                            {"tau", r.tau},
                            {"height", r.height},
                            {"odd_conjugate", r.odd_conjugate}});
    j["degrees"] = std::move(list);
    out << j.dump(2) << "\n";
    return 0;
}

inline Json constituents_json(const std::map<MultiPartition, Cyclotomic>& m) {
    Json list = Json::array();
    for (const auto& [l, c] : m) list.push_back(Json{{"lambda", mp_json(l)}, {"multiplicity", cyclotomic_json(c)}});
    return list;
}

inline void constituents_text(std::ostream& out, const std::map<MultiPartition, Cyclotomic>& m, bool csv, const std::string& prefix = "") {
    std::vector<std::vector<std::string>> rows;
    if (prefix.empty()) rows.push_back({"lambda", "multiplicity"});
    for (const auto& [l, c] : m) {
        rows.push_back({l.to_string(), c.to_string()});
        if (!prefix.empty()) rows.back().insert(rows.back().begin(), prefix);
    }
    if (csv)
        for (const auto& r : rows) csv_row(out, r);
    else
        text_table(out, rows);
}

inline int cmd_decompose(const RunConfig& cfg, Session& s, std::ostream& out) {
    const int m = effective_m(cfg), r = effective_r(cfg);
    Json j = header(cfg);
    if (cfg.target == "model") {
        Context& ctx = s.context(m);
        const ModelDecomposition d = model_decomposition(ctx, m, cfg.allow_even_q);
        if (cfg.format != Format::json) {
            if (cfg.format == Format::csv) csv_row(out, {"r", "lambda", "multiplicity"});
            for (const auto& t : d.terms) {
                if (cfg.format == Format::pretty) out << "r=" << t.r << (t.support_ok ? "" : " (support mismatch)") << "\n";
                constituents_text(out, t.multiplicities, cfg.format == Format::csv, std::to_string(t.r));
            }
            if (cfg.format == Format::pretty) out << (d.union_ok ? "union: every character once" : "union: mismatch") << (d.conjectural ? " (conjectural)" : "") << "\n";
            return 0;
        }
        j["m"] = m;
        j["conjectural"] = d.conjectural;
        Json terms = Json::array();
        for (const auto& t : d.terms)
            terms.push_back(Json{{"r", t.r}, {"support_ok", t.support_ok}, {"constituents", constituents_json(t.multiplicities)}});
        j["terms"] = std::move(terms);
        j["union_ok"] = d.union_ok;
        out << j.dump(2) << "\n";
        return 0;
    }
    const bool gg = cfg.target == "gelfand-graev";
    const int size = gg ? m : 2 * r;
    Context& ctx = s.context(std::max(size, 1));
    const SymElement f = gg ? gelfand_graev(ctx, m) : sp_induction(ctx, r, cfg.allow_even_q);
    const auto mult = multiplicities(ctx, f);
    if (cfg.format != Format::json) {
        constituents_text(out, mult, cfg.format == Format::csv);
        return 0;
    }
    if (gg)
        j["m"] = m;
    else
        j["r"] = r;
    j["conjectural"] = !gg && conjectural_sp(cfg.q);
    j["degree"] = cyclotomic_json(degree_of(ctx, f));
    j["constituents"] = constituents_json(mult);
    out << j.dump(2) << "\n";
    return 0;
}

inline int cmd_verify(const RunConfig& cfg, Session& s, std::ostream& out) {
    if ((cfg.target == "unsym" || cfg.target == "fs") && !s.brute_available())
        throw ConfigError("no brute-force group for n=" + std::to_string(cfg.n) + ", q=" + std::to_string(cfg.q) + " within max-group-order");
    const auto results = checks::run(s, cfg.target);
    bool failed = false;
    for (const auto& r : results) failed = failed || r.failed();
    if (cfg.format == Format::json) {
        Json j = header(cfg);
        j["n"] = cfg.n;
        j["m"] = effective_m(cfg);
        Json list = Json::array();
        for (const auto& r : results) list.push_back(Json{{"name", r.name}, {"status", r.status_string()}, {"detail", r.detail}});
        j["checks"] = std::move(list);
        j["status"] = failed ? "FAIL" : "PASS";
        out << j.dump(2) << "\n";
    } else {
        if (cfg.format == Format::csv) csv_row(out, {"check", "status", "detail"});
        for (const auto& r : results) {
            if (cfg.format == Format::csv)
                csv_row(out, {r.name, r.status_string(), r.detail.dump()});
            else
                out << r.status_string() << " " << r.name << " " << r.detail.dump() << "\n";
        }
    }
    return failed ? 1 : 0;
}

inline int cmd_bruteforce(const RunConfig& cfg, Session& s, std::ostream& out) {
    if (!brute_supported(cfg.n, cfg.q, true))
        throw ConfigError("no brute-force group for n=" + std::to_string(cfg.n) + ", q=" + std::to_string(cfg.q));
    const BruteGroup& g = s.group();
    Context& ctx = s.context(cfg.n);
    const auto census = class_census(g);
    const long sym = symmetric_count(g);
    const IndicatorReport fs = twisted_fs(g, ctx, Involution::transpose_inverse);
    const auto& cols = enumerate_mp(cfg.q, OrbitKind::phi, cfg.n);
    const auto& rows = enumerate_mp(cfg.q, OrbitKind::theta, cfg.n);
    if (cfg.format != Format::json) {
        std::vector<std::vector<std::string>> t{{"mu", "size", "expected_size"}};
        for (const auto& mu : cols) {
            auto it = census.find(mu);
            t.push_back({mu.to_string(), it == census.end() ? "0" : std::to_string(it->second), class_size(mu).get_str()});
        }
        if (cfg.format == Format::csv)
            for (const auto& r : t) csv_row(out, r);
        else {
            out << "order " << g.elements.size() << "\n";
            text_table(out, t);
            out << "symmetric_count " << sym << "\n";
        }
        return 0;
    }
    Json j = header(cfg);
    j["n"] = cfg.n;
    j["order"] = g.elements.size();
    Json cl = Json::array();
    for (const auto& mu : cols) {
        auto it = census.find(mu);
        cl.push_back(Json{{"mu", mp_json(mu)}, {"size", it == census.end() ? 0 : it->second}, {"expected_size", integer_json(class_size(mu))}});
    }
    j["classes"] = std::move(cl);
    j["symmetric_count"] = sym;
    Json st = Json::array(), est = Json::array();
    for (const auto& v : symmetric_stabilizers(g)) st.push_back(integer_json(v));
    for (const auto& v : expected_symmetric_stabilizers(cfg.n, cfg.q)) est.push_back(integer_json(v));
    j["symmetric_stabilizers"] = std::move(st);
    j["expected_stabilizers"] = std::move(est);
    Json ind = Json::object();
    for (const auto& l : rows) ind[l.to_string()] = cyclotomic_json(fs.indicators.at(l));
    j["fs_indicators"] = std::move(ind);
    j["fs_weighted_sum"] = cyclotomic_json(fs.weighted_sum);
    out << j.dump(2) << "\n";
    return 0;
}

inline void error_json(std::ostream& err, const std::string& kind, const std::string& message) {
    err << Json{{"schema", kSchema}, {"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace detail

/// Runs one command. Exit status: 0 success, 1 a verification failed, 2 invalid configuration.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        Session s(cfg);
        if (cfg.command == "orbits") return detail::cmd_orbits(cfg, out);
        if (cfg.command == "classes") return detail::cmd_classes(cfg, out);
        if (cfg.command == "chartable") return detail::cmd_chartable(cfg, s, out);
        if (cfg.command == "degrees") return detail::cmd_degrees(cfg, out);
        if (cfg.command == "decompose") return detail::cmd_decompose(cfg, s, out);
        if (cfg.command == "bruteforce") return detail::cmd_bruteforce(cfg, s, out);
        const auto start = std::chrono::steady_clock::now();
        const int rc = detail::cmd_verify(cfg, s, out);
        const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
        // Timing goes to the diagnostic stream so the report itself stays reproducible.
        err << Json{{"schema", kSchema}, {"runtime_us", std::max<long long>(us, 1)}}.dump() << "\n";
        return rc;
    } catch (const EvenQ& e) {
        detail::error_json(err, "even_q", std::string(e.what()) + " (pass --allow-even-q for the conjectural decomposition)");
    } catch (const BoundExceeded& e) {
        detail::error_json(err, "bound_exceeded", e.what());
    } catch (const std::invalid_argument& e) {
        detail::error_json(err, "invalid_config", e.what());
    } catch (const std::overflow_error& e) {
        detail::error_json(err, "invalid_config", e.what());
    }
    return 2;
}

}  // namespace unitary::cli

#endif  // UNITARY_CLI_HPP
