#include "cosdyn/cli.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cosdyn/expr.hpp"
#include "cosdyn/report.hpp"
#include "cosdyn/seq.hpp"
#include "cosdyn/witness.hpp"

namespace cosdyn::cli {

Command command_from_string(const std::string& s) {
    if (s == "norm") return Command::norm;
    if (s == "conjugate") return Command::conjugate;
    if (s == "check-transitive") return Command::check_transitive;
    if (s == "check-mixing") return Command::check_mixing;
    if (s == "check-direct-sum") return Command::check_direct_sum;
    if (s == "witness") return Command::witness;
    if (s == "reproduce-example") return Command::reproduce_example;
    throw PreconditionError("unknown command '" + s + "'");
}

std::string to_string(Command c) {
    switch (c) {
        case Command::norm: return "norm";
        case Command::conjugate: return "conjugate";
        case Command::check_transitive: return "check-transitive";
        case Command::check_mixing: return "check-mixing";
        case Command::check_direct_sum: return "check-direct-sum";
        case Command::witness: return "witness";
        case Command::reproduce_example: return "reproduce-example";
    }
    return "reproduce-example";
}

YoungFunction resolve_phi(const std::string& spec) {
    try {
        return YoungFunction::preset(spec);
    } catch (const DomainError&) {
        // Not a preset name: treat as an expression.
    }
    const auto ast = expr::parse(spec);
    YoungFunction phi(spec, [ast](double t) { return expr::eval(*ast, t); });
    if (const auto issue = validate_young(phi))
        throw InvalidYoungFunction(issue->invariant, issue->witness, issue->detail);
    return phi;
}

Weight resolve_weight(const std::string& spec) {
    if (spec == "paper-step") return Weight::preset(spec);
    const auto ast = expr::parse(spec);
    const bool constant = expr::is_constant(*ast);
    return Weight(spec, [ast, constant](const GroupElement& x) {
        if (constant) return expr::eval(*ast, 0.0);
        if (x.dim() != 1)
            throw DomainError("expression weights read the point coordinate and need "
                              "dimension 1; got dimension " +
                              std::to_string(x.dim()));
        return expr::eval(*ast, static_cast<double>(x[0]));
    });
}

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

GroupElement element_from_json(const Json& j) {
    if (j.is_number_integer()) return GroupElement{j.get<std::int64_t>()};
    if (j.is_array() && !j.empty()) {
        std::vector<std::int64_t> coords;
        coords.reserve(j.size());
        for (const auto& c : j) {
            if (!c.is_number_integer())
                throw DomainError("group element coordinates must be integers");
            coords.push_back(c.get<std::int64_t>());
        }
        return GroupElement(std::move(coords));
    }
    throw DomainError("cannot read a group element from " + j.dump());
}

std::optional<Json> try_parse_json(const std::string& s) {
    Json j = Json::parse(s, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return std::nullopt;
    return j;
}

}  // namespace

GroupElement parse_group_element(const std::string& spec) {
    const auto j = try_parse_json(trimmed(spec));
    if (!j) throw DomainError("cannot parse group element '" + spec + "'");
    return element_from_json(*j);
}

FiniteSet parse_point_set(const std::string& spec) {
    const std::string s = trimmed(spec);
    if (const auto dots = s.find(".."); dots != std::string::npos) {
        try {
            const std::int64_t a = std::stoll(s.substr(0, dots));
            const std::int64_t b = std::stoll(s.substr(dots + 2));
            return FiniteSet::range(a, b);
        } catch (const std::invalid_argument&) {
            throw DomainError("cannot parse range '" + s + "'; expected a..b");
        } catch (const std::out_of_range&) {
            throw DomainError("range endpoints out of range in '" + s + "'");
        }
    }
    const auto j = try_parse_json(s);
    if (!j || !j->is_array()) throw DomainError("cannot parse point set '" + spec + "'");
    FiniteSet out;
    if (!j->empty() && j->front().is_number_integer()) {
        out.insert(element_from_json(*j));  // a single bare point
        return out;
    }
    for (const auto& e : *j) out.insert(element_from_json(e));
    return out;
}

namespace {

// Compact sequence literal: [{[p0,p1,...],value},...]
FinSeq parse_compact_sequence(const std::string& s) {
    std::size_t pos = 0;
    const auto skip = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    const auto expect = [&](char c) {
        skip();
        if (pos >= s.size() || s[pos] != c)
            throw DomainError("bad sequence literal: expected '" + std::string(1, c) +
                              "' at position " + std::to_string(pos));
        ++pos;
    };
    const auto number = [&]() -> double {
        skip();
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s.substr(pos), &used);
        } catch (const std::exception&) {
            throw DomainError("bad sequence literal: expected a number at position " +
                              std::to_string(pos));
        }
        pos += used;
        return v;
    };

    FinSeq out;
    expect('[');
    skip();
    if (pos < s.size() && s[pos] == ']') {
        ++pos;
        return out;
    }
    while (true) {
        expect('{');
        expect('[');
        std::vector<std::int64_t> coords;
        while (true) {
            coords.push_back(static_cast<std::int64_t>(std::llround(number())));
            skip();
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(']');
        expect(',');
        const double value = number();
        expect('}');
        out.add(GroupElement(std::move(coords)), value);
        skip();
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(']');
    skip();
    if (pos != s.size())
        throw DomainError("bad sequence literal: trailing input at position " +
                          std::to_string(pos));
    return out;
}

FinSeq sequence_from_json(const Json& j) {
    FinSeq out;
    for (const auto& rec : j) {
        if (!rec.is_object() || !rec.contains("point") || !rec.contains("value"))
            throw DomainError("sequence records need {point, value}");
        out.add(element_from_json(rec["point"]), rec["value"].get<double>());
    }
    return out;
}

}  // namespace

FinSeq parse_sequence(const std::string& spec) {
    const std::string s = trimmed(spec);
    if (s.empty()) return {};
    if (const auto j = try_parse_json(s); j && j->is_array()) return sequence_from_json(*j);
    return parse_compact_sequence(s);
}

namespace {

// ---- config files -------------------------------------------------------

Json parse_flat_toml(const std::string& text) {
    Json out = Json::object();
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments outside quotes
        bool quoted = false;
        std::string bare;
        for (char c : line) {
            if (c == '"') quoted = !quoted;
            if (c == '#' && !quoted) break;
            bare += c;
        }
        bare = trimmed(bare);
        if (bare.empty()) continue;
        if (bare.front() == '[')
            throw PreconditionError("config line " + std::to_string(lineno) +
                                    ": sections are not supported; use flat keys");
        const auto eq = bare.find('=');
        if (eq == std::string::npos)
            throw PreconditionError("config line " + std::to_string(lineno) +
                                    ": expected key = value");
        const std::string key = trimmed(bare.substr(0, eq));
        const std::string value = trimmed(bare.substr(eq + 1));
        if (key.empty() || value.empty())
            throw PreconditionError("config line " + std::to_string(lineno) +
                                    ": expected key = value");

        const std::function<Json(const std::string&)> scalar =
            [&](const std::string& v) -> Json {
            if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
                return v.substr(1, v.size() - 2);
            if (v == "true") return true;
            if (v == "false") return false;
            try {
                std::size_t used = 0;
                const double num = std::stod(v, &used);
                if (used == v.size()) {
                    if (num == std::floor(num) && std::abs(num) < 9e15 &&
                        v.find_first_of(".eE") == std::string::npos)
                        return static_cast<std::int64_t>(num);
                    return num;
                }
            } catch (const std::exception&) {
            }
            throw PreconditionError("config line " + std::to_string(lineno) +
                                    ": cannot parse value " + v);
        };

        if (value.front() == '[') {
            if (value.back() != ']')
                throw PreconditionError("config line " + std::to_string(lineno) +
                                        ": unterminated array");
            Json arr = Json::array();
            std::string inner = trimmed(value.substr(1, value.size() - 2));
            if (!inner.empty()) {
                std::size_t start = 0;
                bool q = false;
                for (std::size_t i = 0; i <= inner.size(); ++i) {
                    if (i < inner.size() && inner[i] == '"') q = !q;
                    if (i == inner.size() || (inner[i] == ',' && !q)) {
                        arr.push_back(scalar(trimmed(inner.substr(start, i - start))));
                        start = i + 1;
                    }
                }
            }
            out[key] = std::move(arr);
        } else {
            out[key] = scalar(value);
        }
    }
    return out;
}

std::vector<std::string> string_list(const Json& v, const std::string& key) {
    std::vector<std::string> out;
    if (v.is_string()) {
        out.push_back(v.get<std::string>());
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (e.is_string())
                out.push_back(e.get<std::string>());
            else
                out.push_back(e.dump());
        }
    } else {
        throw PreconditionError("config key '" + key + "' needs a string or string array");
    }
    return out;
}

void apply_config_object(RunConfig& cfg, const Json& obj) {
    if (!obj.is_object()) throw PreconditionError("config root must be an object");
    for (const auto& [key, value] : obj.items()) {
        if (key == "command")
            cfg.command = command_from_string(value.get<std::string>());
        else if (key == "phi")
            cfg.phi = value.get<std::string>();
        else if (key == "weight")
            cfg.weights = string_list(value, key);
        else if (key == "g") {
            if (value.is_array() && !value.empty() && value.front().is_number_integer())
                cfg.gs = {value.dump()};  // coordinates of a single element
            else
                cfg.gs = string_list(value, key);
        } else if (key == "K")
            cfg.K = value.is_string() ? value.get<std::string>() : value.dump();
        else if (key == "horizon")
            cfg.horizon = value.get<std::int64_t>();
        else if (key == "eps")
            cfg.eps = value.get<double>();
        else if (key == "strategy")
            cfg.strategy = value.get<std::string>();
        else if (key == "seed")
            cfg.seed = value.get<std::uint64_t>();
        else if (key == "f")
            cfg.f = value.is_string() ? value.get<std::string>() : value.dump();
        else if (key == "h")
            cfg.h = value.is_string() ? value.get<std::string>() : value.dump();
        else if (key == "ns")
            cfg.ns = value.get<std::vector<std::int64_t>>();
        else if (key == "kind")
            cfg.kind = value.get<std::string>();
        else if (key == "y")
            cfg.y = value.get<double>();
        else if (key == "y_max")
            cfg.y_max = value.get<double>();
        else if (key == "points")
            cfg.points = value.get<int>();
        else if (key == "trials")
            cfg.trials = value.get<int>();
        else if (key == "json")
            cfg.json_path = value.get<std::string>();
        else if (key == "csv")
            cfg.csv_path = value.get<std::string>();
        else
            throw PreconditionError("unknown config key '" + key + "'");
    }
}

}  // namespace

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const std::string t = trimmed(text);
    if (!t.empty() && t.front() == '{') {
        Json obj = Json::parse(text, nullptr, /*allow_exceptions=*/false);
        if (obj.is_discarded())
            throw PreconditionError("config file '" + path + "' is not valid JSON");
        apply_config_object(config, obj);
    } else {
        apply_config_object(config, parse_flat_toml(text));
    }
}

namespace {

// ---- command execution ---------------------------------------------------

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw Error("failed writing output file '" + path + "'");
}

void emit_json(const RunConfig& cfg, const Json& doc, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (!cfg.json_path.empty())
        write_file(cfg.json_path, text);
    else
        out << text;
}

void emit_csv(const RunConfig& cfg, const std::string& csv) {
    if (!cfg.csv_path.empty()) write_file(cfg.csv_path, csv);
}

int verdict_status(Verdict v) {
    switch (v) {
        case Verdict::satisfied_up_to_horizon: return 0;
        case Verdict::violated: return 2;
        case Verdict::inconclusive: return 3;
    }
    return 3;
}

WeightedTranslation make_operator(const RunConfig& cfg, std::size_t component) {
    if (cfg.weights.empty()) throw PreconditionError("missing --weight");
    if (cfg.gs.empty()) throw PreconditionError("missing --g");
    const auto& wspec = cfg.weights.at(component < cfg.weights.size() ? component : 0);
    const auto& gspec = cfg.gs.at(component < cfg.gs.size() ? component : 0);
    return WeightedTranslation(parse_group_element(gspec), resolve_weight(wspec));
}

void validate_common(const RunConfig& cfg) {
    if (!(cfg.eps > 0.0)) throw PreconditionError("eps must be > 0");
    if (cfg.horizon < 1) throw PreconditionError("horizon must be >= 1");
}

void warn_if_contracting(const WeightedTranslation& op, const FiniteSet& K,
                         std::int64_t horizon, std::ostream& err) {
    const auto bounds = op.weight().bounds_over(orbit_window(K, op.shift(), 2 * horizon));
    if (bounds.sup <= 1.0)
        err << "warning: weight '" << op.weight().name()
            << "' has sup <= 1 over the probed window; a positive verdict is impossible\n";
}

int run_norm(const RunConfig& cfg, std::ostream& out) {
    const YoungFunction phi = resolve_phi(cfg.phi);
    if (cfg.f.empty()) throw PreconditionError("missing --f");
    const FinSeq f = parse_sequence(cfg.f);
    double value = 0.0;
    if (cfg.kind == "orlicz")
        value = orlicz_norm(phi, f);
    else if (cfg.kind == "luxemburg")
        value = luxemburg_norm(phi, f);
    else if (cfg.kind == "modular")
        value = modular(phi, f);
    else if (cfg.kind == "dual-bound")
        value = orlicz_norm_dual_bound(phi, f, cfg.trials, cfg.seed);
    else
        throw PreconditionError("unknown norm kind '" + cfg.kind +
                                "'; accepted: orlicz, luxemburg, modular, dual-bound");
    out << format_value(value) << "\n";
    if (!cfg.json_path.empty()) {
        write_file(cfg.json_path, Json{{"schema", kReportSchema},
                                       {"kind", "norm"},
                                       {"phi", phi.name()},
                                       {"norm_kind", cfg.kind},
                                       {"f", to_json(f)},
                                       {"value", value}}
                                      .dump(2) +
                                      "\n");
    }
    return 0;
}

int run_conjugate(const RunConfig& cfg, std::ostream& out) {
    const YoungFunction phi = resolve_phi(cfg.phi);
    const YoungFunction psi = conjugate(phi);
    if (cfg.y.has_value()) {
        out << format_value(psi(*cfg.y)) << "\n";
        return 0;
    }
    if (cfg.points < 2) throw PreconditionError("conjugate table needs points >= 2");
    if (!(cfg.y_max > 0.0)) throw PreconditionError("conjugate table needs y_max > 0");
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "y,psi\n";
    for (int i = 0; i < cfg.points; ++i) {
        const double yv = cfg.y_max * i / (cfg.points - 1);
        const double pv = psi(yv);
        rows.push_back(Json{{"y", yv}, {"psi", pv}});
        csv << format_double(yv) << ',' << format_double(pv) << '\n';
    }
    emit_json(cfg,
              Json{{"schema", kReportSchema},
                   {"kind", "conjugate"},
                   {"phi", phi.name()},
                   {"psi", psi.name()},
                   {"rows", std::move(rows)}},
              out);
    emit_csv(cfg, csv.str());
    return 0;
}

int run_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    validate_common(cfg);
    const YoungFunction phi = resolve_phi(cfg.phi);
    const FiniteSet K = parse_point_set(cfg.K);
    const auto strategy = partition_strategy_from_string(cfg.strategy);

    if (cfg.command == Command::check_direct_sum) {
        std::vector<WeightedTranslation> ops;
        const std::size_t m = std::max(cfg.weights.size(), cfg.gs.size());
        for (std::size_t l = 0; l < m; ++l) ops.push_back(make_operator(cfg, l));
        for (const auto& op : ops) warn_if_contracting(op, K, cfg.horizon, err);
        const auto report = check_direct_sum(ops, phi, K, cfg.horizon, cfg.eps, strategy);
        emit_json(cfg, to_json(report), out);
        if (!cfg.csv_path.empty() && !report.components.empty())
            emit_csv(cfg, to_csv(report.components.front()));
        err << "verdict: " << to_string(report.verdict) << "\n";
        return verdict_status(report.verdict);
    }

    const WeightedTranslation op = make_operator(cfg, 0);
    warn_if_contracting(op, K, cfg.horizon, err);
    const CriterionReport report =
        cfg.command == Command::check_transitive
            ? check_transitive(op, phi, K, cfg.horizon, cfg.eps, strategy)
            : check_mixing(op, phi, K, cfg.horizon, cfg.eps);
    emit_json(cfg, to_json(report), out);
    emit_csv(cfg, to_csv(report));
    err << "verdict: " << to_string(report.verdict) << "\n";
    return verdict_status(report.verdict);
}

int run_witness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    validate_common(cfg);
    const YoungFunction phi = resolve_phi(cfg.phi);
    const WeightedTranslation op = make_operator(cfg, 0);
    const FinSeq f = parse_sequence(cfg.f);
    const FinSeq h = parse_sequence(cfg.h);
    const auto strategy = partition_strategy_from_string(cfg.strategy);
    const FiniteSet K = f.support().united(h.support());
    if (K.empty()) throw PreconditionError("witness needs nonzero f or h");

    std::vector<std::int64_t> ns = cfg.ns;
    if (ns.empty()) {
        // Default checkpoints: the subsequence the transitivity check picks,
        // restricted to translates the construction admits.
        const std::int64_t sep = separation_index(K, op.shift());
        const auto report = check_transitive(op, phi, K, cfg.horizon, cfg.eps, strategy);
        for (auto n : report.subsequence)
            if (n > sep) ns.push_back(n);
        if (ns.empty())
            throw PreconditionError(
                "no admissible checkpoints above the separation index " +
                std::to_string(sep) + "; pass --ns or raise --horizon");
        err << "using checkpoints from the transitivity subsequence\n";
    }

    const WitnessTrace trace = verify_witness(op, phi, f, h, ns, strategy);
    emit_json(cfg, to_json(trace), out);
    emit_csv(cfg, to_csv(trace));
    return 0;
}

int run_reproduce_example(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    validate_common(cfg);
    const YoungFunction phi = YoungFunction::preset("paper-entropy");
    const YoungFunction psi_closed = YoungFunction::preset("paper-exp");
    const YoungFunction psi_num = conjugate(phi);

    // Conjugate pair on [0, 20].
    double max_err = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double yv = 20.0 * i / 199.0;
        max_err = std::max(max_err, std::abs(psi_num(yv) - psi_closed(yv)));
    }
    const bool conjugate_ok = max_err <= 1e-8;

    const Delta2Result d2_phi = is_delta2(phi);
    const Delta2Result d2_psi = is_delta2(psi_closed);
    const bool delta2_ok = d2_phi.satisfied && !d2_psi.satisfied;

    // Feasibility: the largest single-point feasible value, and its bound 2.
    const double t_star = max_feasible_point(psi_closed);
    const bool feasibility_ok = t_star <= 2.0;

    const WeightedTranslation op(GroupElement{1}, Weight::preset("paper-step"));
    const FiniteSet K = FiniteSet::range(-3, 3);
    const CriterionReport transitive =
        check_transitive(op, phi, K, cfg.horizon, cfg.eps, PartitionStrategy::all_plus);

    // The coarse feasibility bound: every quantity is at most twice the plain
    // sum of its products.
    bool upper_bounds_ok = true;
    for (const auto& row : transitive.rows) {
        double sum_fwd = 0.0, sum_bwd = 0.0;
        for (const auto& x : K) {
            sum_fwd += weight_product(op, x, row.n, ProductKind::forward);
            sum_bwd += weight_product(op, x, row.n, ProductKind::backward);
        }
        if (row.q_phi > 2.0 * sum_fwd + 1e-12 || row.q_tilde > 2.0 * sum_bwd + 1e-12)
            upper_bounds_ok = false;
    }

    const CriterionReport mixing = check_mixing(op, phi, K, cfg.horizon, cfg.eps);

    const FinSeq targets = FinSeq::indicator(FiniteSet::range(-1, 1));
    const std::vector<std::int64_t> ns{10, 20, 40, 80};
    const WitnessTrace trace =
        verify_witness(op, phi, targets, targets, ns, PartitionStrategy::all_plus);

    Json doc{{"schema", kReportSchema},
             {"kind", "reproduce-example"},
             {"conjugate_pair", Json{{"max_error", max_err}, {"ok", conjugate_ok}}},
             {"delta2",
              Json{{"phi_satisfied", d2_phi.satisfied},
                   {"phi_constant", d2_phi.constant},
                   {"conjugate_satisfied", d2_psi.satisfied},
                   {"note", "numerical evidence"}}},
             {"feasibility", Json{{"max_point", t_star}, {"bound", 2.0},
                                  {"ok", feasibility_ok}}},
             {"upper_bounds_ok", upper_bounds_ok},
             {"transitive", to_json(transitive)},
             {"mixing", to_json(mixing)},
             {"witness", to_json(trace)}};
    emit_json(cfg, doc, out);
    if (!cfg.csv_path.empty()) emit_csv(cfg, to_csv(transitive));

    err << "conjugate pair max error: " << format_value(max_err)
        << (conjugate_ok ? " (ok)" : " (FAIL)") << "\n";
    err << "delta2: phi " << (d2_phi.satisfied ? "satisfied" : "not satisfied")
        << ", conjugate " << (d2_psi.satisfied ? "satisfied" : "not satisfied")
        << " [numerical evidence]\n";
    err << "feasible point bound: " << format_value(t_star) << " <= 2\n";
    err << "transitive verdict: " << to_string(transitive.verdict) << "\n";
    err << "mixing verdict: " << to_string(mixing.verdict) << "\n";
    if (!trace.rows.empty())
        err << "witness at n=80: dist_to_f = " << format_value(trace.rows.back().dist_to_f)
            << ", dist_to_h = " << format_value(trace.rows.back().dist_to_h) << "\n";

    if (transitive.verdict != Verdict::satisfied_up_to_horizon)
        return verdict_status(transitive.verdict);
    if (!(conjugate_ok && delta2_ok && feasibility_ok && upper_bounds_ok)) return 3;
    return 0;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::norm: return run_norm(config, out);
            case Command::conjugate: return run_conjugate(config, out);
            case Command::check_transitive:
            case Command::check_mixing:
            case Command::check_direct_sum: return run_check(config, out, err);
            case Command::witness: return run_witness(config, out, err);
            case Command::reproduce_example: return run_reproduce_example(config, out, err);
        }
        err << "error: unknown command\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cosdyn::cli
