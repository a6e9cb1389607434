#include "msc/errors.hpp"
#include "msc/invariants.hpp"
#include "msc/normalize.hpp"
#include "msc/oracle.hpp"
#include "msc/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;

namespace {

struct Inputs {
    msc::Program program;
    msc::DeclTable decls;
    std::map<std::string, msc::VarietyPresentation> varieties;
};

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw msc::Error("file not found: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// .var files hold variety presentations; everything else is program text.
// Multiple program files are concatenated in argument order.
Inputs load(const std::vector<std::string>& files) {
    Inputs in;
    std::string program_text;
    for (const auto& f : files) {
        std::string text = read_file(f);
        if (ends_with(f, ".var")) {
            for (auto& [name, v] : msc::parse_varieties(text)) {
                if (!in.varieties.emplace(name, std::move(v)).second)
                    throw msc::Error("variety '" + name + "' defined twice");
            }
        } else {
            program_text += text;
            if (!text.empty() && text.back() != '\n') program_text += '\n';
        }
    }
    in.program = msc::parse(program_text);
    in.decls = in.program.decl_table();
    return in;
}

// --name accepts a binding name or, failing that, a bare expression such as
// "pt" or "GL(2)".
msc::ExprPtr resolve_name(const Inputs& in, const std::string& name) {
    if (const msc::Binding* b = in.program.find_binding(name)) return b->expr;
    return msc::parse_expression(name, in.decls);
}

bool contains_complement(const msc::StackExpr& e) {
    if (e.kind == msc::StackExpr::Kind::Complement) return true;
    for (const auto& c : e.children)
        if (contains_complement(*c)) return true;
    return false;
}

void complement_note(const msc::StackExpr& e) {
    static bool printed = false;
    if (!printed && contains_complement(e)) {
        std::cerr << "note: '-' is class-level subtraction; the tool does not "
                     "check that the subtrahend embeds in the ambient class\n";
        printed = true;
    }
}

json rational_json(const msc::Rational& r) {
    return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw msc::Error("cannot write: " + out_path);
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
}

std::vector<long long> parse_int_list(const std::string& list, const char* what) {
    std::vector<long long> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw msc::Error(std::string("bad ") + what + " value: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw msc::Error(std::string("empty ") + what + " list");
    return out;
}

long long enum_guard() {
    if (const char* env = std::getenv("MSC_ENUM_GUARD")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw msc::Error("MSC_ENUM_GUARD is not an integer");
        }
    }
    return msc::kDefaultEnumGuard;
}

// ---- subcommands --------------------------------------------------------

int run_eval(const std::vector<std::string>& files, const std::string& name,
             bool as_json, const std::string& out_path) {
    Inputs in = load(files);
    std::vector<std::pair<std::string, msc::RingElement>> results;
    if (!name.empty()) {
        msc::ExprPtr e = resolve_name(in, name);
        complement_note(*e);
        results.emplace_back(name, msc::normalize(e, in.decls));
    } else {
        for (const auto& b : in.program.bindings) complement_note(*b.expr);
        results = msc::normalize_program(in.program);
    }
    std::ostringstream text;
    json j{{"schema", "v1"}, {"command", "eval"}, {"results", json::array()}};
    for (const auto& [n, elem] : results) {
        if (!name.empty())
            text << elem.str() << "\n";
        else
            text << n << " = " << elem.str() << "\n";
        j["results"].push_back(json{{"name", n}, {"class", elem.str()}});
    }
    emit(as_json ? j.dump(2) : text.str(), out_path);
    return 0;
}

int run_count(const std::vector<std::string>& files, const std::string& name,
              const std::string& q_list, bool check_trace, bool as_json,
              const std::string& out_path) {
    Inputs in = load(files);
    msc::ExprPtr expr = resolve_name(in, name);
    complement_note(*expr);
    msc::RingElement elem = msc::normalize(expr, in.decls);
    std::vector<long long> qs = parse_int_list(q_list, "--q");
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

    bool all_ok = true;
    std::ostringstream text;
    json j{{"schema", "v1"},
           {"command", "count"},
           {"name", name},
           {"check_trace", check_trace},
           {"results", json::array()}};
    for (long long q : qs) {
        json row{{"q", q}};
        try {
            msc::Rational symbolic =
                msc::point_count(elem, q, msc::count_env(elem, q, in.decls));
            row["symbolic"] = rational_json(symbolic);
            if (check_trace) {
                msc::Rational comp = msc::mu_compositional(expr, q, in.decls);
                bool agree = symbolic == comp;
                row["compositional"] = rational_json(comp);
                row["agree"] = agree;
                text << "q=" << q << ": symbolic=" << msc::to_string(symbolic)
                     << " compositional=" << msc::to_string(comp)
                     << (agree ? " ok" : " MISMATCH") << "\n";
                if (!agree) all_ok = false;
            } else {
                text << "q=" << q << ": " << msc::to_string(symbolic) << "\n";
            }
        } catch (const msc::Error& e) {
            row["error"] = e.what();
            text << "q=" << q << ": error: " << e.what() << "\n";
            all_ok = false;
        }
        j["results"].push_back(std::move(row));
    }
    emit(as_json ? j.dump(2) : text.str(), out_path);
    return all_ok ? 0 : 1;
}

int run_hodge(const std::vector<std::string>& files, const std::string& name,
              long long order, bool as_json, const std::string& out_path) {
    if (order < 0) throw msc::Error("--order must be >= 0");
    Inputs in = load(files);
    msc::ExprPtr expr = resolve_name(in, name);
    complement_note(*expr);
    msc::TruncatedSeries s = msc::hodge(expr, static_cast<int>(order), in.decls);

    std::ostringstream text;
    json j{{"schema", "v1"},
           {"command", "hodge"},
           {"name", name},
           {"order", order},
           {"coeffs", json::array()}};
    for (const auto& [pq, c] : s.coeffs()) {
        text << "(" << pq.first << "," << pq.second << ") -> " << c.str() << "\n";
        j["coeffs"].push_back(json::array({pq.first, pq.second, c.str()}));
    }
    if (s.is_zero()) text << "0\n";
    emit(as_json ? j.dump(2) : text.str(), out_path);
    return 0;
}

int run_oracle(const std::vector<std::string>& files, const std::string& name,
               const std::string& variety, int r, const std::string& p_list,
               bool as_json, const std::string& out_path) {
    Inputs in = load(files);
    auto vit = in.varieties.find(variety);
    if (vit == in.varieties.end())
        throw msc::Error("unknown variety '" + variety + "'");
    const msc::VarietyPresentation& v = vit->second;
    msc::ExprPtr expr = resolve_name(in, name);
    complement_note(*expr);
    if (r < 0) throw msc::Error("--r must be >= 0");
    msc::ExprPtr compared = r > 0 ? msc::quotient_by_gl(expr, r) : expr;
    msc::RingElement elem = msc::normalize(compared, in.decls);
    std::vector<long long> ps = parse_int_list(p_list, "--p");
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    long long guard = enum_guard();

    bool all_ok = true;
    std::ostringstream text;
    json j{{"schema", "v1"},
           {"command", "oracle"},
           {"name", name},
           {"variety", variety},
           {"r", r},
           {"results", json::array()}};
    for (long long p : ps) {
        json row{{"p", p}};
        if (!msc::is_prime(p) && msc::is_prime_power(p)) {
            row["skipped"] = "prime power; the oracle handles prime fields only";
            text << "p=" << p << ": skipped (prime power, oracle prime-only)\n";
            j["results"].push_back(std::move(row));
            continue;
        }
        try {
            msc::Rational oracle_val =
                msc::groupoid_count(v, r, msc::FieldSpec(p), guard);
            msc::Rational symbolic =
                msc::point_count(elem, p, msc::count_env(elem, p, in.decls));
            bool pass = oracle_val == symbolic;
            row["oracle"] = rational_json(oracle_val);
            row["symbolic"] = rational_json(symbolic);
            row["pass"] = pass;
            text << "p=" << p << ": oracle=" << msc::to_string(oracle_val)
                 << " symbolic=" << msc::to_string(symbolic)
                 << (pass ? " pass" : " FAIL") << "\n";
            if (!pass) all_ok = false;
        } catch (const msc::Error& e) {
            row["error"] = e.what();
            text << "p=" << p << ": error: " << e.what() << "\n";
            all_ok = false;
        }
        j["results"].push_back(std::move(row));
    }
    emit(as_json ? j.dump(2) : text.str(), out_path);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "msc: symbolic classes of special stacks in the localized "
        "Grothendieck ring of varieties"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string name, q_list, p_list, variety, out_path;
    long long order = 0;
    int r = 0;
    bool check_trace = false, as_json = false;

    CLI::App* eval = app.add_subcommand("eval", "normalize bindings to the ring");
    eval->add_option("files", files, "program files (.stk)")->required();
    eval->add_option("--name", name, "binding name or bare expression");
    eval->add_flag("--json", as_json, "emit JSON");
    eval->add_option("--out", out_path, "write report to a file");

    CLI::App* count = app.add_subcommand("count", "point counts over F_q");
    count->add_option("files", files, "program files (.stk)")->required();
    count->add_option("--name", name, "binding name or bare expression")->required();
    count->add_option("--q", q_list, "comma-separated prime powers")->required();
    count->add_flag("--check-trace", check_trace,
                    "also compute the structural count and compare");
    count->add_flag("--json", as_json, "emit JSON");
    count->add_option("--out", out_path, "write report to a file");

    CLI::App* hodge = app.add_subcommand("hodge", "Hodge series expansion");
    hodge->add_option("files", files, "program files (.stk)")->required();
    hodge->add_option("--name", name, "binding name or bare expression")->required();
    hodge->add_option("--order", order, "expansion order (powers of uv)")->required();
    hodge->add_flag("--json", as_json, "emit JSON");
    hodge->add_option("--out", out_path, "write report to a file");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "brute-force comparison against the symbolic count");
    oracle->add_option("files", files, "program (.stk) and variety (.var) files")
        ->required();
    oracle->add_option("--name", name, "class expression for the variety")->required();
    oracle->add_option("--variety", variety, "variety to enumerate")->required();
    oracle->add_option("--r", r, "quotient by GL(r); 0 = no quotient");
    oracle->add_option("--p", p_list, "comma-separated primes")->required();
    oracle->add_flag("--json", as_json, "emit JSON");
    oracle->add_option("--out", out_path, "write report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) return run_eval(files, name, as_json, out_path);
        if (*count)
            return run_count(files, name, q_list, check_trace, as_json, out_path);
        if (*hodge) return run_hodge(files, name, order, as_json, out_path);
        if (*oracle)
            return run_oracle(files, name, variety, r, p_list, as_json, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
