// recap: classify recurrences, search for progressions, factor trinomials and
// re-run the reproduction suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "recap/recap.hpp"

namespace {

using namespace recap;  // NOLINT

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

class UsageError : public Error {
public:
    using Error::Error;
};

struct Window {
    std::int64_t lo = 0;
    std::int64_t hi = 60;
};

Window parse_window(const std::string& s) {
    auto colon = s.find(':', 1);  // a leading '-' belongs to LO
    if (colon == std::string::npos) throw UsageError("--window expects LO:HI, got '" + s + "'");
    try {
        std::size_t used = 0;
        Window w;
        w.lo = std::stoll(s.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("lo");
        std::string rest = s.substr(colon + 1);
        w.hi = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("hi");
        if (w.lo > w.hi) throw UsageError("--window needs LO <= HI");
        return w;
    } catch (const std::logic_error&) {
        throw UsageError("--window expects integers LO:HI, got '" + s + "'");
    }
}

struct Input {
    std::string file;
    std::string inline_json;
};

Json read_input(const Input& in) {
    if (in.file.empty() == in.inline_json.empty()) throw UsageError("give exactly one of --input FILE or --json STR");
    if (!in.inline_json.empty()) return parse_json_text(in.inline_json);
    std::ifstream f(in.file);
    if (!f) throw UsageError("cannot read " + in.file);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_json_text(ss.str());
}

std::string idx(const char* var, std::int64_t slope, std::int64_t off) {
    std::string s = "f_{";
    if (slope == 0) return "f_" + std::to_string(off);
    if (slope == -1) s += "-";
    else if (slope != 1) s += std::to_string(slope);
    s += var;
    if (off > 0) s += "+" + std::to_string(off);
    if (off < 0) s += std::to_string(off);
    return s + "}";
}

// Families in the notation (outer, mean, outer).
std::string notation(const AnyFamily& fam) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ShiftFamily>) {
                auto i = f.instance(0);
                return "(" + idx("n", 1, i[0]) + ", " + idx("n", 1, i[1]) + ", " + idx("n", 1, i[2]) + ")";
            } else if constexpr (std::is_same_v<T, SymmetricFamily>) {
                auto a = to_affine(f);
                return "(" + idx("t", a.outer1.slope, a.outer1.offset) + ", " + idx("t", a.mean.slope, a.mean.offset) +
                       ", " + idx("t", a.outer2.slope, a.outer2.offset) + ")";
            } else if constexpr (std::is_same_v<T, AffineFamily>) {
                return "(" + idx("t", f.outer1.slope, f.outer1.offset) + ", " + idx("t", f.mean.slope, f.mean.offset) +
                       ", " + idx("t", f.outer2.slope, f.outer2.offset) + ")";
            } else {
                return family_label(f);
            }
        },
        fam);
}

// The unitary example (any nonzero multiple) carries a known family that no
// detector produces.
std::vector<AnyFamily> declared_families(const LinearRecurrence& minimal, const Json& doc) {
    std::vector<AnyFamily> out;
    if (doc.contains("declared_families")) {
        const Json& d = doc["declared_families"];
        if (!d.is_array()) throw ParseError("declared_families: expected an array");
        for (std::size_t i = 0; i < d.size(); ++i)
            out.push_back(family_from_json(d[i], "declared_families[" + std::to_string(i) + "]"));
    }
    if (minimal.order() == 2 && companion(minimal) == companion(unitary_example()) &&
        minimal.initial()[0].is_zero())
        out.push_back(unitary_family());
    return out;
}

struct Detected {
    LinearRecurrence minimal;
    StructureReport structure;
    std::vector<AnyFamily> families;
    std::string note;
};

Detected detect(const LinearRecurrence& rec, std::int64_t max_shift) {
    Detected d{minimalize(rec), {}, {}, ""};
    d.structure = classify_roots(d.minimal);
    auto sym = detect_symmetric(d.minimal);
    d.structure.symmetric = sym.info;
    d.structure.symmetric_determined = sym.status == SymmetricStatus::Determined;
    d.structure.exceptional = detect_exceptional(d.minimal);
    if (d.structure.exceptional) {
        const auto& e = *d.structure.exceptional;
        if (e.gamma.is_integer())
            d.families.push_back(ExceptionalFamily{e.K, e.gamma.num().get_si(), e.R});
        else
            d.note = "exceptional form with non-integral gamma: no index family";
        return d;
    }
    if (d.structure.is_degenerate || d.structure.is_unitary) {
        d.note = d.structure.is_degenerate ? "degenerate: family search not attempted"
                                           : "unitary: family search not attempted";
        return d;
    }
    if (max_shift >= 2)
        for (const auto& f : detect_shift_families(d.minimal, max_shift)) d.families.push_back(f);
    if (d.structure.symmetric && d.minimal.order() == 2)
        for (const auto& f : detect_symmetric_families(d.minimal, d.structure.symmetric->M, 4)) d.families.push_back(f);
    return d;
}

void print(const Json& j, const std::string& format, const std::string& text) {
    if (format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

int cmd_classify(const Input& in, std::int64_t max_shift, const std::string& window, const std::string& format) {
    Json doc = read_input(in);
    auto rec = recurrence_from_json(doc);
    auto d = detect(rec, max_shift);
    Json out{{"recurrence", to_json(d.minimal)}, {"structure", to_json(d.structure)}};
    Json fams = Json::array();
    std::ostringstream text;
    const auto& s = d.structure;
    text << "minimal order: " << s.minimal_order << "\n"
         << "simple: " << (s.is_simple ? "yes" : "no") << "\n"
         << "degenerate: " << (s.is_degenerate ? "yes" : "no") << "\n"
         << "unitary: " << (s.is_unitary ? "yes" : "no") << "\n"
         << "symmetric: " << (s.symmetric ? "M=" + std::to_string(s.symmetric->M) : (s.symmetric_determined ? "no" : "not determined")) << "\n";
    if (s.exceptional)
        text << "exceptional: K=" << s.exceptional->K << " gamma=" << s.exceptional->gamma << " R=" << s.exceptional->R << "\n";
    for (const auto& f : d.families) {
        Json j = to_json(f);
        j["notation"] = notation(f);
        fams.push_back(j);
        text << "family: " << family_label(f) << "  " << notation(f) << "\n";
    }
    out["families"] = fams;
    if (!d.note.empty()) {
        out["note"] = d.note;
        text << "note: " << d.note << "\n";
    }
    if (!window.empty()) {
        auto w = parse_window(window);
        auto fam = d.families;
        for (auto& f : declared_families(d.minimal, doc)) fam.push_back(f);
        auto split = split_isolated(brute_force_aps(d.minimal, w.lo, w.hi), fam);
        Json iso = Json::array();
        for (const auto& x : split.isolated) {
            iso.push_back(to_json(x));
            text << "isolated: (" << x.m << ", " << x.n << ", " << x.k << ")\n";
        }
        out["isolated"] = iso;
    }
    print(out, format, text.str());
    return kExitOk;
}

int cmd_search(const Input& in, const std::string& window, int terms, bool allow_zero, std::int64_t max_shift,
               const std::string& format) {
    Json doc = read_input(in);
    auto rec = recurrence_from_json(doc);
    auto w = parse_window(window.empty() ? "0:60" : window);
    SearchOptions opt;
    opt.allow_zero_mean = allow_zero;
    std::ostringstream text;
    Json out{{"window", {w.lo, w.hi}}, {"terms", terms}};
    if (terms == 4) {
        Json sols = Json::array();
        for (const auto& s : brute_force_ap4(rec, w.lo, w.hi, opt)) {
            sols.push_back(to_json(s));
            text << "(" << s.idx[0] << ", " << s.idx[1] << ", " << s.idx[2] << ", " << s.idx[3] << ")\n";
        }
        out["solutions"] = sols;
        print(out, format, text.str());
        return kExitOk;
    }
    auto d = detect(rec, max_shift);
    // isolated means "on no shift, exceptional or declared family"; symmetric
    // families reach negative indices and are reported beside the split
    std::vector<AnyFamily> fams, symmetric;
    for (const auto& f : d.families)
        (std::holds_alternative<SymmetricFamily>(f) ? symmetric : fams).push_back(f);
    const std::size_t detected = fams.size();
    for (auto& f : declared_families(d.minimal, doc)) fams.push_back(f);
    auto split = split_isolated(brute_force_aps(rec, w.lo, w.hi, opt), fams);
    Json fj = Json::array();
    for (std::size_t i = 0; i < fams.size(); ++i) {
        Json j = to_json(fams[i]);
        j["notation"] = notation(fams[i]);
        j["declared"] = i >= detected;
        fj.push_back(j);
    }
    Json sj = Json::array();
    for (const auto& f : symmetric) {
        Json j = to_json(f);
        j["notation"] = notation(f);
        sj.push_back(j);
    }
    Json members = Json::array();
    for (const auto& [s, i] : split.members) {
        Json j = to_json(s);
        j["family"] = i;
        members.push_back(j);
        text << "(" << s.m << ", " << s.n << ", " << s.k << ")  " << notation(fams[i])
             << (i >= detected ? "  [declared]" : "") << "\n";
    }
    Json iso = Json::array();
    for (const auto& s : split.isolated) {
        Json j = to_json(s);
        Json on = Json::array();
        std::string also;
        for (std::size_t i = 0; i < symmetric.size(); ++i)
            if (family_contains(symmetric[i], s)) {
                on.push_back(i);
                if (also.empty()) also = "  also on " + notation(symmetric[i]);
            }
        j["symmetric_families"] = on;
        iso.push_back(j);
        text << "(" << s.m << ", " << s.n << ", " << s.k << ")  isolated" << also << "\n";
    }
    out["symmetric_families"] = sj;
    out["families"] = fj;
    out["members"] = members;
    out["isolated"] = iso;
    print(out, format, text.str());
    return kExitOk;
}

int cmd_factor(const std::vector<std::string>& variant, const std::string& poly, int max_deg, int bound,
               const std::string& format) {
    if (variant.empty() == poly.empty()) throw UsageError("give exactly one of --variant V A B or --poly STR");
    Json out;
    std::ostringstream text;
    if (!variant.empty()) {
        std::int64_t a, b;
        try {
            a = std::stoll(variant[1]);
            b = std::stoll(variant[2]);
        } catch (const std::logic_error&) {
            throw UsageError("--variant expects V A B with integer A and B");
        }
        auto f = factor_variant(parse_variant(variant[0]), a, b, bound);
        out = to_json(f);
        text << build_trinomial(f.variant, a, b) << " = (" << f.cyclotomic_cofactor << ")";
        for (const auto& g : f.noncyclotomic_factors) text << "(" << g << ")";
        text << "\nexception: " << (f.is_schinzel_exception ? "yes" : "no")
             << "\ncertified: " << (f.certified ? "yes" : "no") << "\n";
    } else {
        Polynomial p = Polynomial::parse(poly);
        if (!p.has_integer_coeffs()) throw UsageError("--poly needs integer coefficients");
        if (p.degree() < 1) throw UsageError("--poly needs degree >= 1");
        int deg = max_deg > 0 ? max_deg : static_cast<int>(p.degree());
        auto rep = factor_search(p, deg);
        out = to_json(rep, p);
        text << p << " =";
        Rational content = p.lead() / primitive_part(p).lead();
        if (content != Rational(1)) text << " " << content;
        for (const auto& f : rep.factors) {
            text << " (" << f.poly << ")";
            if (f.multiplicity > 1) text << "^" << f.multiplicity;
        }
        if (rep.unresolved.degree() > 0) text << " [" << rep.unresolved << "]";
        text << "\ncertified: " << (rep.complete ? "yes" : "no") << "\n";
    }
    print(out, format, text.str());
    return kExitOk;
}

int cmd_verify_paper(int bound, const std::string& window, const std::string& format) {
    if (bound < 3) throw UsageError("--lemma-degree-bound must be >= 3 (cubic table rows need it)");
    PaperOptions opt;
    opt.lemma_degree_bound = bound;
    if (!window.empty()) {
        auto w = parse_window(window);
        if (w.lo != 0 || w.hi < 10) throw UsageError("verify-paper --window must be 0:N with N >= 10");
        opt.window_hi = w.hi;
    }
    Json j = verify_paper(opt);
    std::ostringstream text;
    auto line = [&](const std::string& name, const Json& item) {
        text << (item["pass"].get<bool>() ? "PASS " : "FAIL ") << name << "\n";
    };
    for (const char* k : {"table_bin", "table_ter"}) line(k, j[k]);
    for (const auto& r : j["table_sym"])
        line("table_sym shape " + std::to_string(r["shape"].get<int>()) + " alpha=" + r["alpha"].get<std::string>(), r);
    for (const char* k : {"fibonacci", "unitary", "exceptional", "corollary_int"}) line(k, j[k]);
    for (const char* k : {"schinzel_upto", "plus2_upto", "power_equation"}) line(std::string("lemmas.") + k, j["lemmas"][k]);
    text << (j["all_pass"].get<bool>() ? "all pass\n" : "some items fail\n");
    print(j, format, text.str());
    return j["all_pass"].get<bool>() ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recap: arithmetic progressions in linear recurrences"};
    app.require_subcommand(1);
    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    Input in;
    std::string window;
    std::int64_t max_shift = 10;
    auto* classify = app.add_subcommand("classify", "Structure flags and infinite families of a recurrence");
    classify->add_option("--input", in.file, "Recurrence JSON file");
    classify->add_option("--json", in.inline_json, "Recurrence JSON text");
    classify->add_option("--max-shift", max_shift, "Largest shift a in the trinomial search");
    classify->add_option("--window", window, "Also list isolated solutions in LO:HI");
    add_format(classify);

    int terms = 3;
    bool allow_zero = false;
    auto* search = app.add_subcommand("search", "Exact brute-force progression search");
    search->add_option("--input", in.file, "Recurrence JSON file");
    search->add_option("--json", in.inline_json, "Recurrence JSON text");
    search->add_option("--window", window, "Index window LO:HI (default 0:60)");
    search->add_option("--terms", terms, "Progression length")->check(CLI::IsMember({3, 4}));
    search->add_flag("--allow-zero-mean", allow_zero, "Keep progressions whose middle term is 0");
    search->add_option("--max-shift", max_shift, "Largest shift a in the trinomial search");
    add_format(search);

    std::vector<std::string> variant;
    std::string poly;
    int max_deg = 0;
    int bound = kDefaultLemmaDegreeBound;
    auto* factor = app.add_subcommand("factor", "Factor a trinomial variant or an integer polynomial");
    factor->add_option("--variant", variant, "mid|low|high A B")->expected(3);
    factor->add_option("--poly", poly, "Polynomial such as \"X^4+X^2-2\"");
    factor->add_option("--max-deg", max_deg, "Largest factor degree to search");
    factor->add_option("--lemma-degree-bound", bound, "Exact search up to this trinomial degree");
    add_format(factor);

    auto* verify = app.add_subcommand("verify-paper", "Re-run every table and corollary check");
    verify->add_option("--lemma-degree-bound", bound, "Lemma sweep bound n <= N");
    verify->add_option("--window", window, "Fibonacci window 0:N");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classify) return cmd_classify(in, max_shift, window, format);
        if (*search) return cmd_search(in, window, terms, allow_zero, max_shift, format);
        if (*factor) return cmd_factor(variant, poly, max_deg, bound, format);
        return cmd_verify_paper(bound, window, format);
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
