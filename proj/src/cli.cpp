#include "folindex/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "folindex/chern.hpp"
#include "folindex/errors.hpp"
#include "folindex/parser.hpp"
#include "folindex/puiseux.hpp"

namespace folindex::cli {

namespace {

const Point kOrigin{FieldElem(0), FieldElem(0)};

void allow_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> keys) {
    if (!obj.is_object()) throw ParseError(where + " must be a JSON object");
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [k, v] : obj.items())
        if (!ok.count(k)) throw ParseError("unknown key '" + k + "' in " + where);
}

std::string str(const Json& j, const std::string& what) {
    if (!j.is_string()) throw ParseError(what + " must be a string");
    return j.get<std::string>();
}

std::pair<std::string, std::string> str_pair(const Json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) throw ParseError(what + " must be a pair of strings");
    return {str(j[0], what), str(j[1], what)};
}

struct Ctx {
    const std::vector<std::string>& vars;
    const FieldPtr& field;
    MultiPoly poly(const Json& j, const std::string& what) const { return parse_poly(str(j, what), vars, field); }
    VectorFieldGerm vf(const Json& j, const std::string& what) const {
        auto [a, b] = str_pair(j, what);
        return {parse_poly(a, vars, field), parse_poly(b, vars, field)};
    }
};

GermProblem parse_germ(const Json& g, const Ctx& ctx) {
    allow_keys(g, "germ", {"vector_field", "divisor", "log_basis", "balanced_divisor"});
    GermProblem out;
    if (g.contains("vector_field")) out.field = ctx.vf(g["vector_field"], "germ.vector_field");
    if (g.contains("divisor")) out.divisor = ctx.poly(g["divisor"], "germ.divisor");
    if (g.contains("log_basis")) {
        const Json& lb = g["log_basis"];
        if (!lb.is_array() || lb.size() != 2) throw ParseError("germ.log_basis must hold two vector fields");
        out.log_basis = std::make_pair(ctx.vf(lb[0], "germ.log_basis"), ctx.vf(lb[1], "germ.log_basis"));
    }
    if (g.contains("balanced_divisor")) {
        const Json& bd = g["balanced_divisor"];
        if (!bd.is_array()) throw ParseError("germ.balanced_divisor must be an array");
        for (const auto& e : bd) {
            allow_keys(e, "balanced_divisor entry", {"curve", "coeff"});
            if (!e.contains("curve") || !e.contains("coeff"))
                throw ParseError("balanced_divisor entries need \"curve\" and \"coeff\"");
            out.balanced_divisor.emplace_back(ctx.poly(e["curve"], "curve"), json_long(e["coeff"], "coeff"));
        }
    }
    return out;
}

FoliationProblem parse_foliation(const Json& f, const Problem& p) {
    allow_keys(f, "foliation", {"affine_field", "divisor"});
    if (!f.contains("affine_field")) throw ParseError("foliation.affine_field is required");
    auto [a, b] = str_pair(f["affine_field"], "foliation.affine_field");
    FoliationProblem out{parse_poly(a, p.variables, p.field).renamed(kChartVars[0]),
                         parse_poly(b, p.variables, p.field).renamed(kChartVars[0]), std::nullopt};
    if (f.contains("divisor")) {
        std::vector<std::string> hv = p.variables;
        hv.push_back("z");
        if (p.variables[0] == "z" || p.variables[1] == "z")
            throw ParseError("the homogenizing variable z cannot be an affine variable");
        out.divisor = parse_poly(str(f["divisor"], "foliation.divisor"), hv, p.field).renamed(kHomogeneousVars);
    }
    return out;
}

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ParseError(where + " needs \"" + key + "\"");
    return j[key];
}

std::vector<long> long_list(const Json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array");
    std::vector<long> out;
    for (const auto& e : j) out.push_back(json_long(e, what));
    return out;
}

Json string_list(const std::vector<std::string>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

std::vector<std::string> strings_from(const Json& j, const char* key) {
    std::vector<std::string> out;
    if (j.contains(key))
        for (const auto& e : j[key]) out.push_back(e.get<std::string>());
    return out;
}

const GermProblem& germ_of(const Problem& p) {
    if (!p.germ) throw ParseError("this command needs a \"germ\" section");
    return *p.germ;
}

const VectorFieldGerm& field_of(const GermProblem& g) {
    if (!g.field) throw PreconditionError("missing-input", "germ.vector_field is required");
    return *g.field;
}

const MultiPoly& divisor_of(const GermProblem& g) {
    if (!g.divisor) throw PreconditionError("missing-input", "germ.divisor is required for this index");
    return *g.divisor;
}

Json envelope(const std::string& command, const Problem& p) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["problem"] = p.source;
    return j;
}

// Moves "problem" to the end so the interesting keys come first.
Json with_problem_last(Json j) {
    Json prob = j["problem"];
    j.erase("problem");
    j["problem"] = std::move(prob);
    return j;
}

Json class_json(const std::vector<long>& c) {
    Json a = Json::array();
    for (long v : c) a.push_back(dec(v));
    return a;
}

// --- constructible function expressions ---

class ConfunParser {
   public:
    ConfunParser(const std::string& text, const std::vector<std::string>& vars, const FieldPtr& field)
        : vars_(vars), field_(field) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    ConstructibleFn parse() {
        if (s_.empty()) throw ParseError("empty constructible function expression");
        ConstructibleFn g;
        bool first = true;
        while (i_ < s_.size()) {
            long sign = 1;
            if (s_[i_] == '+' || s_[i_] == '-') {
                sign = s_[i_] == '-' ? -1 : 1;
                ++i_;
            } else if (!first) {
                fail("expected + or -");
            }
            const long k = sign * coefficient();
            g = g + k * atom();
            first = false;
        }
        return g;
    }

   private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("constructible function: " + why + " at position " + std::to_string(i_) + " in '" + s_ + "'");
    }

    // Optional "k*" prefix. Digits directly followed by '[' are the atom "1[".
    long coefficient() {
        size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_ || (j < s_.size() && s_[j] == '[')) return 1;
        const long k = std::stol(s_.substr(i_, j - i_));
        i_ = j;
        if (i_ < s_.size() && s_[i_] == '*') ++i_;
        return k;
    }

    ConstructibleFn atom() {
        const size_t open = s_.find('[', i_);
        if (open == std::string::npos) fail("expected an atom such as 1[W] or Eu[f]");
        const std::string head = s_.substr(i_, open - i_);
        int depth = 0;
        size_t close = open;
        for (; close < s_.size(); ++close) {
            if (s_[close] == '[') ++depth;
            if (s_[close] == ']' && --depth == 0) break;
        }
        if (close >= s_.size()) fail("unbalanced brackets");
        const std::string body = s_.substr(open + 1, close - open - 1);
        i_ = close + 1;
        if (head == "1" && body == "W") return ConstructibleFn::ambient();
        if (head == "1" && body == "0") return ConstructibleFn::point();
        const MultiPoly f = parse_poly(body, vars_, field_);
        if (head == "1") return indicator_curve(f);
        if (head == "Eu") return ConstructibleFn::euler_obstruction(f);
        if (head == "Psi") return nearby_cycles(f);
        if (head == "Phi") return vanishing_cycles(f);
        fail("unknown atom '" + head + "'");
    }

    std::string s_;
    size_t i_ = 0;
    const std::vector<std::string>& vars_;
    const FieldPtr& field_;
};

int exit_code(ErrorKind k) { return static_cast<int>(k); }

}  // namespace

long json_long(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return j.get<long>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == s.size() && !s.empty()) return v;
    }
    throw ParseError(what + " must be an integer (decimal string or number)");
}

std::string dec(long v) { return std::to_string(v); }

Problem parse_problem(const Json& doc) {
    allow_keys(doc, "problem", {"schema_version", "field", "variables", "germ", "foliation", "chern"});
    Problem p;
    p.source = doc;
    if (doc.contains("schema_version") && str(doc["schema_version"], "schema_version") != kSchemaVersion)
        throw ParseError("unsupported schema_version " + doc["schema_version"].dump());
    const int sections = int(doc.contains("germ")) + int(doc.contains("foliation")) + int(doc.contains("chern"));
    if (sections != 1) throw ParseError("exactly one of \"germ\", \"foliation\", \"chern\" is required");
    if (doc.contains("field")) {
        const Json& f = doc["field"];
        allow_keys(f, "field", {"generator", "minpoly"});
        const std::string gen = str(need(f, "generator", "field"), "field.generator");
        if (!is_identifier(gen)) throw ParseError("field generator '" + gen + "' is not an identifier");
        p.field = FieldDescriptor::extension(gen, parse_qpoly(str(need(f, "minpoly", "field"), "field.minpoly"), gen));
    }
    if (doc.contains("chern")) {
        p.chern = doc["chern"];
        allow_keys(*p.chern, "chern", {"operation", "space", "degree", "milnor", "twist", "class", "degrees"});
        return p;
    }
    if (!doc.contains("variables")) throw ParseError("\"variables\" is required");
    const Json& vs = doc["variables"];
    if (!vs.is_array() || vs.size() != 2) throw ParseError("\"variables\" must list the two plane coordinates");
    for (const auto& v : vs) {
        const std::string name = str(v, "variable");
        if (!is_identifier(name)) throw ParseError("'" + name + "' is not a variable name");
        if (!p.field->is_rational() && name == p.field->generator())
            throw ParseError("variable '" + name + "' clashes with the field generator");
        p.variables.push_back(name);
    }
    if (p.variables[0] == p.variables[1]) throw ParseError("variables must be distinct");
    if (doc.contains("germ")) p.germ = parse_germ(doc["germ"], Ctx{p.variables, p.field});
    if (doc.contains("foliation")) p.foliation = parse_foliation(doc["foliation"], p);
    return p;
}

Problem read_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_problem(doc);
}

IndexKind kind_from_flag(const std::string& flag) {
    static const std::vector<std::pair<std::string, IndexKind>> table{
        {"ph", IndexKind::PH},         {"euobs", IndexKind::EU_OBSTRUCTION}, {"gsv", IndexKind::GSV},
        {"schwartz", IndexKind::SCHWARTZ}, {"log", IndexKind::LOG},          {"mu-curve", IndexKind::MU_ALONG_CURVE},
        {"polar", IndexKind::POLAR},   {"chi", IndexKind::CHI_NUMBER}};
    for (const auto& [name, k] : table)
        if (name == flag) return k;
    throw ParseError("unknown --kind '" + flag + "'");
}

Theorem theorem_from_flag(const std::string& flag) {
    if (flag == "baum-bott") return Theorem::BAUM_BOTT;
    if (flag == "seh") return Theorem::COR_SEH;
    if (flag == "iso") return Theorem::COR_ISO;
    if (flag == "total-gsv") return Theorem::TOTAL_GSV;
    throw ParseError("unknown --theorem '" + flag + "'");
}

ConstructibleFn parse_confun(const std::string& text, const std::vector<std::string>& vars, const FieldPtr& field) {
    return ConfunParser(text, vars, field).parse();
}

Json to_json(const IndexReport& r) {
    Json j;
    j["kind"] = kind_name(r.kind);
    j["value"] = dec(r.value);
    Json ing = Json::object();
    for (const auto& [k, v] : r.ingredients) ing[k] = dec(v);
    j["ingredients"] = ing;
    j["assumptions"] = string_list(r.assumptions);
    return j;
}

Json to_json(const GlobalReport& r) {
    Json j;
    j["kind"] = theorem_name(r.theorem);
    j["lhs"] = dec(r.lhs);
    j["rhs"] = dec(r.rhs);
    if (r.has_rhs_alt) j["rhs_alt"] = dec(r.rhs_alt);
    Json pts = Json::array();
    for (const auto& t : r.per_point)
        pts.push_back(Json{{"point", t.point},
                           {"kind", t.kind},
                           {"value", dec(t.value)},
                           {"weight", dec(t.weight)},
                           {"form", dec(t.form)}});
    j["per_point"] = pts;
    j["assumptions"] = string_list(r.assumptions);
    j["evidence"] = string_list(r.evidence);
    j["pass"] = r.pass;
    return j;
}

IndexReport index_report_from_json(const Json& j) {
    IndexReport r;
    r.kind = kind_from_name(str(need(j, "kind", "report"), "kind"));
    r.value = json_long(need(j, "value", "report"), "value");
    for (const auto& [k, v] : need(j, "ingredients", "report").items()) r.add(k, json_long(v, k));
    r.assumptions = strings_from(j, "assumptions");
    return r;
}

GlobalReport global_report_from_json(const Json& j) {
    GlobalReport r;
    r.theorem = theorem_from_name(str(need(j, "kind", "report"), "kind"));
    r.lhs = json_long(need(j, "lhs", "report"), "lhs");
    r.rhs = json_long(need(j, "rhs", "report"), "rhs");
    if (j.contains("rhs_alt")) {
        r.has_rhs_alt = true;
        r.rhs_alt = json_long(j["rhs_alt"], "rhs_alt");
    }
    for (const auto& t : need(j, "per_point", "report"))
        r.per_point.push_back({str(t["point"], "point"), str(t["kind"], "kind"), json_long(t["value"], "value"),
                               json_long(t["weight"], "weight"), static_cast<int>(json_long(t["form"], "form"))});
    r.assumptions = strings_from(j, "assumptions");
    r.evidence = strings_from(j, "evidence");
    r.pass = need(j, "pass", "report").get<bool>();
    return r;
}

Json run_index(const Problem& p, IndexKind kind) {
    const GermProblem& g = germ_of(p);
    const VectorFieldGerm& nu = field_of(g);
    IndexReport r;
    switch (kind) {
        case IndexKind::PH: r = ph_index(nu); break;
        case IndexKind::EU_OBSTRUCTION: r = euler_obstruction_field(nu, divisor_of(g)); break;
        case IndexKind::GSV: r = gsv_index(nu, divisor_of(g)); break;
        case IndexKind::SCHWARTZ: r = schwartz_index(nu, divisor_of(g)); break;
        case IndexKind::MU_ALONG_CURVE: r = mu_along_curve(nu, divisor_of(g)); break;
        case IndexKind::POLAR: r = polar_intersection(nu, divisor_of(g)); break;
        case IndexKind::LOG: {
            std::optional<LogBasis> basis;
            if (g.log_basis && g.divisor) {
                basis = LogBasis{g.log_basis->first, g.log_basis->second, *g.divisor};
            } else if (g.divisor) {
                basis = automatic_log_basis(*g.divisor, kOrigin);
            }
            if (!basis)
                throw PreconditionError("missing-log-basis",
                                        "--kind log needs germ.log_basis and germ.divisor (automatic bases cover smooth "
                                        "and weighted homogeneous divisors)");
            saito_check(basis->chi1, basis->chi2, basis->divisor);
            r = log_index(nu, *basis);
            if (!g.log_basis) r.assumptions.push_back("Saito basis chosen automatically");
            break;
        }
        case IndexKind::CHI_NUMBER:
            if (g.balanced_divisor.empty())
                throw PreconditionError("missing-input", "germ.balanced_divisor is required for --kind chi");
            r = chi_number(nu, g.balanced_divisor);
            break;
    }
    Json j = envelope("index", p);
    j.update(to_json(r));
    return with_problem_last(j);
}

Json run_verify(const Problem& p, Theorem t, Exec exec) {
    if (!p.foliation) throw ParseError("verify needs a \"foliation\" section");
    const FoliationProblem& fp = *p.foliation;
    const ProjFoliation F = ProjFoliation::from_affine(fp.a, fp.b);
    auto divisor = [&]() -> const MultiPoly& {
        if (!fp.divisor) throw PreconditionError("missing-input", "foliation.divisor is required for this theorem");
        return *fp.divisor;
    };
    GlobalReport r;
    switch (t) {
        case Theorem::BAUM_BOTT: r = verify_baum_bott(F, exec); break;
        case Theorem::COR_SEH: r = verify_log_seh(F, divisor(), {}, exec); break;
        case Theorem::COR_ISO: r = verify_isolated(F, divisor(), exec); break;
        case Theorem::TOTAL_GSV: r = verify_total_gsv(F, divisor(), exec); break;
    }
    Json j = envelope("verify", p);
    j.update(to_json(r));
    j["degree"] = dec(F.degree);
    return with_problem_last(j);
}

Json run_puiseux(const Problem& p, std::optional<int> precision) {
    const MultiPoly& f = divisor_of(germ_of(p));
    const auto bs = precision ? branches(f, kOrigin, *precision)
                              : with_adaptive_precision(initial_precision(f),
                                                        [&](int n) { return branches(f, kOrigin, n); });
    Json j = envelope("puiseux", p);
    j["kind"] = "PUISEUX";
    j["curve"] = f.to_string();
    Json arr = Json::array();
    for (const auto& b : bs)
        arr.push_back(Json{{"x", b.x.to_string()},
                           {"y", b.y.to_string()},
                           {"multiplicity", dec(b.multiplicity)},
                           {"conjugacy_size", dec(b.conjugacy_size)},
                           {"field", b.field->describe()}});
    j["branches"] = arr;
    return with_problem_last(j);
}

Json run_confun(const Problem& p, const std::string& expression) {
    const GermProblem& gp = germ_of(p);
    const ConstructibleFn g = parse_confun(expression, p.variables, p.field);
    Json j = envelope("confun", p);
    j["kind"] = "CONFUN";
    j["expression"] = expression;
    j["function"] = g.to_string();
    const auto form = g.indicator_form();
    Json curves = Json::object();
    for (const auto& [k, v] : form.curves) curves[k] = dec(v);
    j["indicator_form"] = Json{{"ambient", dec(form.ambient)}, {"curves", curves}, {"point", dec(form.point)}};
    j["characteristic_cycle"] = cc(g).to_string();
    j["value_at_origin"] = dec(g.value_at_origin());
    if (gp.field) j["value"] = dec(index_pairing(g, *gp.field));
    return with_problem_last(j);
}

Json run_chern(const Problem& p) {
    if (!p.chern) throw ParseError("chern needs a \"chern\" section");
    const Json& c = *p.chern;
    const std::string op = str(need(c, "operation", "chern"), "chern.operation");
    auto csm = [&]() {
        const std::string space = c.contains("space") ? str(c["space"], "chern.space") : "P2";
        if (space == "P2") return csm_projective_plane();
        const long k = json_long(need(c, "degree", "chern"), "chern.degree");
        const auto mus = c.contains("milnor") ? long_list(c["milnor"], "chern.milnor") : std::vector<long>{};
        if (space == "curve") return csm_curve(k, mus);
        if (space == "complement") return csm_complement(k, mus);
        throw ParseError("chern.space must be P2, curve or complement");
    };
    auto rank2 = [&]() {
        const auto v = long_list(need(c, "class", "chern"), "chern.class");
        return ChowClass(2, v);
    };
    Json j = envelope("chern", p);
    j["kind"] = "CHERN";
    j["operation"] = op;
    if (op == "twisted_index_sum") {
        const CSMClass a = csm();
        j["csm"] = class_json(a.alpha);
        j["value"] = dec(twisted_index_sum(a, json_long(need(c, "twist", "chern"), "chern.twist")));
    } else if (op == "csm") {
        const CSMClass a = csm();
        j["class"] = class_json(a.alpha);
        j["text"] = a.to_string();
        j["value"] = dec(a[0]);
    } else if (op == "top_chern_twist") {
        j["value"] = dec(top_chern_twist(rank2(), json_long(need(c, "twist", "chern"), "chern.twist")));
    } else if (op == "virtual_quotient") {
        const ChowClass q = chern_virtual_quotient(rank2(), json_long(need(c, "twist", "chern"), "chern.twist"));
        j["class"] = class_json(q.c);
        j["text"] = q.to_string();
        j["value"] = dec(chow_integral(q));
    } else if (op == "log_chern_snc") {
        const ChowClass q = log_chern_snc(long_list(need(c, "degrees", "chern"), "chern.degrees"));
        j["class"] = class_json(q.c);
        j["text"] = q.to_string();
        j["value"] = dec(chow_integral(q));
    } else {
        throw ParseError("unknown chern.operation '" + op + "'");
    }
    return with_problem_last(j);
}

std::string render(const Json& r) {
    std::ostringstream os;
    if (r.contains("error")) {
        os << "error [" << r["error"]["code"].get<std::string>() << "]: " << r["error"]["message"].get<std::string>()
           << "\n";
        return os.str();
    }
    const std::string cmd = r["command"];
    if (cmd == "index") {
        os << r["kind"].get<std::string>() << " = " << r["value"].get<std::string>() << "\n";
        for (const auto& [k, v] : r["ingredients"].items()) os << "  " << k << " = " << v.get<std::string>() << "\n";
    } else if (cmd == "verify") {
        os << r["kind"].get<std::string>() << " (degree " << r["degree"].get<std::string>() << ")\n";
        for (const auto& t : r["per_point"])
            os << "  " << t["point"].get<std::string>() << "  " << t["kind"].get<std::string>() << " = "
               << t["value"].get<std::string>() << "  weight " << t["weight"].get<std::string>()
               << (t["form"] == "2" ? "  (second form)" : "") << "\n";
        os << "lhs = " << r["lhs"].get<std::string>() << ", rhs = " << r["rhs"].get<std::string>();
        if (r.contains("rhs_alt")) os << ", rhs_alt = " << r["rhs_alt"].get<std::string>();
        os << ": " << (r["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    } else if (cmd == "puiseux") {
        os << r["branches"].size() << " branch(es) of " << r["curve"].get<std::string>() << "\n";
        for (const auto& b : r["branches"])
            os << "  (" << b["x"].get<std::string>() << ", " << b["y"].get<std::string>() << ")  multiplicity "
               << b["multiplicity"].get<std::string>() << ", conjugates " << b["conjugacy_size"].get<std::string>()
               << ", over " << b["field"].get<std::string>() << "\n";
    } else if (cmd == "confun") {
        os << r["function"].get<std::string>() << "\n  CC = " << r["characteristic_cycle"].get<std::string>()
           << "\n  value at 0 = " << r["value_at_origin"].get<std::string>() << "\n";
        if (r.contains("value")) os << "  pairing = " << r["value"].get<std::string>() << "\n";
    } else {
        os << r["operation"].get<std::string>() << " = " << r["value"].get<std::string>() << "\n";
        if (r.contains("text")) os << "  class " << r["text"].get<std::string>() << "\n";
    }
    if (r.contains("assumptions"))
        for (const auto& a : r["assumptions"]) os << "assumption: " << a.get<std::string>() << "\n";
    return os.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"folindex: local indices of plane foliation germs and global index theorems on P^2"};
    app.require_subcommand(1);
    std::string input, json_path, kind, theorem, expr;
    std::optional<int> precision;
    bool serial = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "problem file (JSON)")->required();
        sub->add_option("--json", json_path, "write the JSON report to FILE ('-' for stdout)");
    };
    auto* index = app.add_subcommand("index", "compute one local index of a germ");
    common(index);
    index->add_option("--kind", kind, "ph|euobs|gsv|schwartz|log|mu-curve|polar|chi")->required();
    auto* verify = app.add_subcommand("verify", "check a global index theorem on P^2");
    common(verify);
    verify->add_option("--theorem", theorem, "baum-bott|seh|iso|total-gsv")->required();
    verify->add_flag("--serial", serial, "run per-point work on one thread");
    auto* puiseux = app.add_subcommand("puiseux", "Puiseux branches of germ.divisor");
    common(puiseux);
    puiseux->add_option("--precision", precision, "fixed truncation order");
    auto* confun = app.add_subcommand("confun", "evaluate a constructible function and pair it with germ.vector_field");
    common(confun);
    confun->add_option("--expr", expr, "e.g. \"Psi[x*y]\" or \"1[W] - 1[y^2 - x^3]\"")->required();
    auto* chern = app.add_subcommand("chern", "Chern and CSM class computations on P^2");
    common(chern);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : exit_code(ErrorKind::Parse);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Json report;
    int rc = 0;
    try {
        const Problem p = read_problem(input);
        if (command == "index") report = run_index(p, kind_from_flag(kind));
        if (command == "verify") {
            report = run_verify(p, theorem_from_flag(theorem), serial ? Exec::Serial : Exec::Parallel);
            if (!report["pass"].get<bool>()) rc = exit_code(ErrorKind::Mismatch);
        }
        if (command == "puiseux") report = run_puiseux(p, precision);
        if (command == "confun") report = run_confun(p, expr);
        if (command == "chern") report = run_chern(p);
    } catch (const Error& e) {
        rc = exit_code(e.kind());
        report = Json{{"schema_version", kSchemaVersion},
                      {"command", command},
                      {"error", Json{{"exit_code", dec(rc)}, {"code", e.code()}, {"message", e.what()}}}};
    }

    if (json_path == "-") {
        out << report.dump(2) << "\n";
    } else {
        (rc == 0 || rc == exit_code(ErrorKind::Mismatch) ? out : err) << render(report);
        if (!json_path.empty()) {
            std::ofstream f(json_path);
            if (!f) {
                err << "error [parse]: cannot write " << json_path << "\n";
                return exit_code(ErrorKind::Parse);
            }
            f << report.dump(2) << "\n";
        }
    }
    return rc;
}

}  // namespace folindex::cli
