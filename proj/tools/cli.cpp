#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "bsn/bsn.hpp"
#include "bsn/json_io.hpp"

namespace bsn::cli {

namespace {

using nlohmann::json;

std::int64_t parse_int(const std::string& text, const char* what) {
    std::int64_t out = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    if (ec != std::errc() || ptr != end)
        throw parse_error(std::string(what) + ": expected an integer, got '" + text + "'", 0);
    return out;
}

mpz_class parse_big(const std::optional<std::string>& text, const char* what) {
    if (!text)
        throw domain_error(std::string("missing --") + what);
    mpz_class out;
    if (text->empty() || out.set_str(*text, 10) != 0)
        throw parse_error(std::string(what) + ": expected an integer, got '" + *text + "'", 0);
    return out;
}

const std::string& need(const std::optional<std::string>& v, const char* flag) {
    if (!v)
        throw domain_error(std::string("missing --") + flag);
    return *v;
}

void need_args(const Request& req, std::size_t count) {
    if (req.args.size() != count)
        throw domain_error(req.cmd + ": expected " + std::to_string(count) + " argument(s), got " +
                           std::to_string(req.args.size()));
}

std::vector<std::int64_t> parse_box(const std::string& text, std::size_t parts) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_int(item, "--box"));
    if (out.size() != parts)
        throw parse_error("--box: expected " + std::to_string(parts) + " comma-separated bounds", 0);
    for (const auto b : out)
        if (b < 0)
            throw domain_error("--box: bounds must be non-negative");
    return out;
}

Response decision(const TcpResult& r, json extra = json::object()) {
    Response out;
    out.text = r.decision ? "YES, witness = " + to_string(*r.witness) : "NO";
    out.body = tcp_json(r);
    for (auto& [k, v] : extra.items())
        out.body[k] = v;
    return out;
}

Response element(const GroupElement& g, const char* key = "normal_form") {
    Response out;
    out.text = to_string(g);
    out.body = {{key, out.text}};
    return out;
}

Response boolean(bool b, const char* key) {
    Response out;
    out.text = b ? "true" : "false";
    out.body = {{key, b}};
    return out;
}

Response dispatch(const Request& req) {
    const GroupContext ctx(req.n);
    const auto word = [&](const std::string& w) { return parse_element(w, ctx); };
    const auto endo = [&] { return parse_endo(need(req.endo, "endo"), ctx); };
    const auto& c = req.cmd;

    if (c == "normalize" || c == "inv" || c == "pi" || c == "matrix") {
        need_args(req, 1);
        const auto g = word(req.args[0]);
        if (c == "normalize")
            return element(g);
        if (c == "inv")
            return element(inv(g));
        if (c == "pi") {
            Response out;
            out.text = std::to_string(t_exponent(g));
            out.body = {{"t_exponent", t_exponent(g)}};
            return out;
        }
        const auto m = to_matrix(g);
        Response out;
        out.text = m.str();
        out.body = {{"matrix", {{m(0, 0).get_str(), m(0, 1).get_str()}, {m(1, 0).get_str(), m(1, 1).get_str()}}}};
        return out;
    }
    if (c == "mul") {
        need_args(req, 2);
        return element(mul(word(req.args[0]), word(req.args[1])));
    }
    if (c == "pow") {
        need_args(req, 2);
        return element(pow(word(req.args[0]), parse_int(req.args[1], "pow")));
    }
    if (c == "eq") {
        need_args(req, 2);
        return boolean(word(req.args[0]) == word(req.args[1]), "equal");
    }
    if (c == "apply") {
        need_args(req, 1);
        return element(apply(endo(), word(req.args[0])), "image");
    }
    if (c == "compose") {
        need_args(req, 2);
        const auto e = compose(parse_endo(req.args[0], ctx), parse_endo(req.args[1], ctx));
        Response out;
        out.text = to_string(e);
        out.body = endo_json(e);
        return out;
    }
    if (c == "tcp") {
        need_args(req, 2);
        return decision(decide_tcp({word(req.args[0]), word(req.args[1]), endo()}));
    }
    if (c == "conj") {
        need_args(req, 2);
        return decision(decide_conj(word(req.args[0]), word(req.args[1])));
    }
    if (c == "fix-check") {
        need_args(req, 1);
        return boolean(is_fixed(endo(), word(req.args[0])), "fixed");
    }
    if (c == "outer-fix") {
        need_args(req, 1);
        return decision(is_outer_fixed(endo(), word(req.args[0])));
    }
    if (c == "weakly-fix") {
        need_args(req, 1);
        return decision(is_weakly_fixed(endo(), word(req.args[0]), word(need(req.afix, "afix"))));
    }
    if (c == "fix-class-a") {
        need_args(req, 0);
        const auto u = word(need(req.u, "u"));
        const auto v = word(need(req.v, "v"));
        const auto res = fix_in_class_of_a(u, v, NRational::parse(need(req.alpha, "alpha"), req.n));
        auto out = decision(res.tcp, {{"fixed", element_json(res.fixed)},
                                      {"psi", endo_json(build_psi(u, v))}});
        if (res.fixed)
            out.text += ", fixed = " + to_string(*res.fixed);
        return out;
    }
    if (c == "prop48") {
        need_args(req, 0);
        const auto u = word(need(req.u, "u"));
        const auto v = word(need(req.v, "v"));
        const auto afix = word(need(req.afix, "afix"));
        const auto g1 = word(need(req.g1, "g1"));
        const auto g2 = word(need(req.g2, "g2"));
        Response out;
        try {
            const auto g = verify_prop48(u, v, afix, g1, g2);
            if (!g) {
                out.text = "hypothesis fails";
                out.body = {{"hypothesis", false}};
            } else {
                out.text = "identity holds, g' = " + to_string(*g);
                out.body = {{"hypothesis", true}, {"identity", true}, {"conjugator", to_string(*g)}};
            }
        } catch (const identity_falsified& e) {
            out.code = kInternalError;
            out.text = std::string("identity falsified: ") + e.what();
            out.body = {{"hypothesis", true},
                        {"identity", false},
                        {"conjugator", to_string(e.conjugator())},
                        {"expected", to_string(e.expected())},
                        {"error", e.what()}};
        }
        return out;
    }
    if (c == "dioph" || c == "oracle-dioph") {
        need_args(req, 0);
        const DiophInstance di{parse_big(req.A, "A"), parse_big(req.B, "B"), parse_big(req.C, "C"), req.n};
        std::optional<DiophSolution> sol;
        if (c == "dioph") {
            sol = solve(di);
        } else {
            const auto b = parse_box(req.box.value_or("20,20"), 2);
            sol = brute_dioph(di, b[0], b[1]);
        }
        Response out;
        out.body = dioph_json(sol);
        out.text = out.body.dump();
        return out;
    }
    if (c == "oracle-tcp") {
        need_args(req, 2);
        const auto b = parse_box(req.box.value_or("2,10,3"), 3);
        const TcpInstance inst{word(req.args[0]), word(req.args[1]), endo()};
        const auto g = brute_tcp(inst, {b[1], b[0], b[2]});
        Response out;
        out.text = g ? "FOUND, witness = " + to_string(*g) : "NONE in box";
        out.body = {{"found", g.has_value()}, {"witness", element_json(g)}};
        return out;
    }
    throw domain_error("unknown subcommand '" + c + "'");
}

Response failure(int code, const std::string& msg) {
    Response out;
    out.code = code;
    out.text = "error: " + msg;
    out.body = {{"error", msg}};
    return out;
}

std::optional<std::string> opt_string(const json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null())
        return std::nullopt;
    const auto& v = j[key];
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<std::int64_t>());
    throw domain_error(std::string("batch: field '") + key + "' must be a string or integer");
}

void emit(const Response& r, bool as_json, std::ostream& out, std::ostream& err) {
    if (as_json) {
        auto body = r.body;
        out << body.dump() << '\n';
    } else if (r.code == kOk) {
        out << r.text << '\n';
    } else {
        // partial results such as a falsified identity still go to stdout
        (r.body.contains("hypothesis") ? out : err) << r.text << '\n';
    }
}

int run_batch(const Request& base, bool parallel, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);

    std::vector<Response> results(lines.size());
    const auto work = [&](std::size_t i) {
        try {
            auto req = request_from_json(json::parse(lines[i]), base.n);
            req.json = true;
            results[i] = execute(req);
        } catch (const json::exception& e) {
            results[i] = failure(kInputError, std::string("batch line ") + std::to_string(i + 1) + ": " + e.what());
        } catch (const std::exception& e) {
            results[i] = failure(kInputError, std::string("batch line ") + std::to_string(i + 1) + ": " + e.what());
        }
    };

    if (parallel && lines.size() > 1) {
        std::atomic<std::size_t> next{0};
        const auto workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                              static_cast<unsigned>(lines.size())));
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < lines.size(); i = next++)
                    work(i);
            });
        for (auto& t : pool)
            t.join();
    } else {
        for (std::size_t i = 0; i < lines.size(); ++i)
            work(i);
    }

    int code = kOk;
    for (const auto& r : results) {
        emit(r, true, out, err);
        code = std::max(code, r.code);
    }
    return code;
}

} // namespace

Request request_from_json(const json& j, std::int64_t default_n) {
    if (!j.is_object())
        throw domain_error("batch: each line must be a JSON object");
    Request req;
    req.cmd = j.at("cmd").get<std::string>();
    req.n = j.contains("n") ? j["n"].get<std::int64_t>() : default_n;
    if (j.contains("args"))
        for (const auto& a : j["args"])
            req.args.push_back(a.is_string() ? a.get<std::string>() : a.dump());
    req.endo = opt_string(j, "endo");
    req.alpha = opt_string(j, "alpha");
    req.u = opt_string(j, "u");
    req.v = opt_string(j, "v");
    req.afix = opt_string(j, "afix");
    req.g1 = opt_string(j, "g1");
    req.g2 = opt_string(j, "g2");
    req.A = opt_string(j, "A");
    req.B = opt_string(j, "B");
    req.C = opt_string(j, "C");
    req.box = opt_string(j, "box");
    return req;
}

Response execute(const Request& req) {
    try {
        return dispatch(req);
    } catch (const parse_error& e) {
        return failure(kInputError, e.what());
    } catch (const internal_error& e) {
        return failure(kInternalError, std::string("internal: ") + e.what());
    } catch (const domain_error& e) {
        return failure(kInputError, e.what());
    } catch (const std::invalid_argument& e) {
        return failure(kInputError, e.what());
    }
}

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decision procedures for twisted conjugacy in BS(1,n)", "bsn"};
    app.require_subcommand(0, 1);

    Request req;
    bool batch = false;
    bool parallel = false;
    app.add_option("-n", req.n, "Group parameter n (|n| >= 2)")->capture_default_str();
    app.add_flag("--json", req.json, "Emit JSON");
    app.add_flag("--batch", batch, "Read JSON requests from stdin, one per line");
    app.add_flag("--parallel", parallel, "Evaluate batch lines concurrently (output stays ordered)");

    struct Spec {
        const char* name;
        const char* help;
        std::vector<const char*> flags;
        int positionals;
    };
    const std::vector<Spec> specs{
        {"normalize", "Normal form a^alpha t^c of a word", {}, 1},
        {"mul", "Product of two words", {}, 2},
        {"inv", "Inverse of a word", {}, 1},
        {"pow", "Power g^r", {}, 2},
        {"eq", "Equality of two words", {}, 2},
        {"pi", "t-exponent sum", {}, 1},
        {"apply", "Image of a word under --endo", {"endo"}, 1},
        {"compose", "Composition of two endo specs (left first)", {}, 2},
        {"tcp", "Twisted conjugacy of u and v under --endo", {"endo"}, 2},
        {"conj", "Ordinary conjugacy of u and v", {}, 2},
        {"fix-check", "Is the word fixed by --endo", {"endo"}, 1},
        {"outer-fix", "Is g --endo conjugate to g", {"endo"}, 1},
        {"weakly-fix", "Is g --endo conjugate to --afix", {"endo", "afix"}, 1},
        {"fix-class-a", "Fixed point of a -> u a u^-1, t -> v in the class of a", {"u", "v", "alpha"}, 0},
        {"prop48", "Check the weakly-fixed-point conjugator identity", {"u", "v", "afix", "g1", "g2"}, 0},
        {"dioph", "Solve A n^x + B y = C n^z", {"A", "B", "C"}, 0},
        {"oracle-tcp", "Brute-force conjugator search (--box x,y,p)", {"endo", "box"}, 2},
        {"oracle-dioph", "Brute-force Diophantine search (--box xmax,zmax)", {"A", "B", "C", "box"}, 0},
        {"matrix", "Matrix [[n^c, alpha], [0, 1]]", {}, 1},
    };
    const auto field = [&req](const std::string& flag) -> std::optional<std::string>& {
        if (flag == "endo") return req.endo;
        if (flag == "alpha") return req.alpha;
        if (flag == "u") return req.u;
        if (flag == "v") return req.v;
        if (flag == "afix") return req.afix;
        if (flag == "g1") return req.g1;
        if (flag == "g2") return req.g2;
        if (flag == "A") return req.A;
        if (flag == "B") return req.B;
        if (flag == "C") return req.C;
        return req.box;
    };
    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->callback([&req, name = std::string(s.name)] { req.cmd = name; });
        for (const auto* f : s.flags)
            sub->add_option(std::string("--") + f, field(f));
        if (s.positionals > 0)
            sub->add_option("args", req.args, "Words or endo specs")->expected(s.positionals)->required();
        sub->add_option("-n", req.n, "Group parameter n");
        sub->add_flag("--json", req.json, "Emit JSON");
    }

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    if (batch)
        return run_batch(req, parallel, in, out, err);
    if (req.cmd.empty()) {
        err << "error: a subcommand is required (see --help)\n";
        return kInputError;
    }
    const auto res = execute(req);
    emit(res, req.json, out, err);
    return res.code;
}

} // namespace bsn::cli
