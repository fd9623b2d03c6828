// syzcert: exact Hilbert polynomials and syzygy-bundle stability certificates
// for polarized varieties of Picard number one.
//
// Exit codes: 0 all checks pass; 1 mathematical failure/counterexample;
// 2 usage or input error; 3 weak certificate (equality at k = 1).

#include "syzcert/ci_hilbert.hpp"
#include "syzcert/criterion.hpp"
#include "syzcert/rr_hilbert.hpp"
#include "syzcert/serialize.hpp"
#include "syzcert/verify.hpp"
#include "syzcert/weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace syzcert;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWeak = 3;

struct CommonOpts {
    std::string format;  // "json" or "tsv"
    std::string out;     // empty = stdout
    int workers = 0;     // 0 = unset; resolved via SYZCERT_WORKERS, then 1
};

int default_workers() {
    if (const char* env = std::getenv("SYZCERT_WORKERS")) {
        try {
            int w = std::stoi(env);
            if (w >= 1) return w;
        } catch (const std::exception&) {
        }
        throw CLI::ValidationError("SYZCERT_WORKERS must be a positive integer");
    }
    return 1;
}

void add_common(CLI::App* sub, CommonOpts& opts, const std::string& default_format) {
    opts.format = default_format;
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    sub->add_option("--out", opts.out, "Write the report to a file instead of stdout");
    sub->add_option("--workers", opts.workers, "Worker thread count")
        ->check(CLI::PositiveNumber);
}

void write_report(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + opts.out + "'");
    out << text;
}

// tsv rendering of a flat report: one key<TAB>value line per top-level field,
// nested structure dumped compactly.
std::string to_tsv_lines(const Json& j) {
    std::ostringstream os;
    for (const auto& [key, value] : j.items()) {
        os << key << '\t';
        if (value.is_string()) {
            os << value.get<std::string>();
        } else {
            os << value.dump();
        }
        os << '\n';
    }
    return os.str();
}

void emit(const CommonOpts& opts, const Json& j) {
    write_report(opts, opts.format == "tsv" ? to_tsv_lines(j) : dump_json(j));
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("malformed " + what + " '" + text + "'");
}

Rational parse_rational_or_throw(const std::string& text, const std::string& what) {
    auto q = parse_rational(text);
    if (!q) throw std::invalid_argument("malformed " + what + " '" + text + "'");
    return *q;
}

std::vector<int> parse_degree_list(const std::string& text) {
    std::vector<int> degrees;
    if (text.empty()) return degrees;
    for (const auto& part : split(text, ',')) {
        degrees.push_back(parse_int(part, "degree"));
    }
    return degrees;
}

// "n:d1,d2,..." (degrees optional: "3" or "3:" mean projective 3-space)
MultiDegree parse_ci_shorthand(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.empty() || parts.size() > 2) {
        throw std::invalid_argument("expected n:d1,d2,... but got '" + text + "'");
    }
    int n = parse_int(parts[0], "ambient dimension");
    std::vector<int> degrees = parts.size() == 2 ? parse_degree_list(parts[1]) : std::vector<int>{};
    return MultiDegree(n, std::move(degrees));
}

RootDatum parse_homog_shorthand(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.size() != 3 || parts[0].size() != 1) {
        throw std::invalid_argument("expected T:rank:node but got '" + text + "'");
    }
    return RootDatum{lie_type_from_char(parts[0][0]), parse_int(parts[1], "rank"),
                     parse_int(parts[2], "node")};
}

ChernData parse_chern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    ChernData cd;
    bool have_n = false;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        }
        if (trimmed.empty()) continue;
        auto eq = trimmed.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("expected key=value but got '" + line + "'");
        }
        std::string key = trimmed.substr(0, eq);
        std::string value = trimmed.substr(eq + 1);
        if (key == "n") {
            cd.n = parse_int(value, "n");
            have_n = true;
        } else if (key == "Hn") {
            cd.Hn = parse_rational_or_throw(value, "Hn");
        } else if (key == "c1H") {
            cd.c1H = parse_rational_or_throw(value, "c1H");
        } else if (key == "c1sqH") {
            cd.c1sqH = parse_rational_or_throw(value, "c1sqH");
        } else if (key == "c2H") {
            cd.c2H = parse_rational_or_throw(value, "c2H");
        } else if (key == "c1c2H") {
            cd.c1c2H = parse_rational_or_throw(value, "c1c2H");
        } else if (key == "chiO") {
            cd.chiO = parse_rational_or_throw(value, "chiO");
        } else {
            throw std::invalid_argument("unknown key '" + key + "'");
        }
    }
    if (!have_n) throw std::invalid_argument("Chern data file is missing n");
    return cd;
}

ToddVector parse_todd_entries(const std::string& text) {
    std::vector<Rational> entries;
    for (const auto& part : split(text, ',')) {
        entries.push_back(parse_rational_or_throw(part, "Todd entry"));
    }
    const int n = static_cast<int>(entries.size()) - 1;
    return make_todd_vector(n, std::move(entries));
}

// Polynomial sources shared by `criterion` and `certify`.
struct SourceOpts {
    std::string ci;
    std::string homog;
    std::string abelian;
    std::string todd_file;
    std::string todd_entries;
    std::string poly_file;
};

void add_source_options(CLI::App* sub, SourceOpts& opts) {
    auto* ci = sub->add_option("--ci", opts.ci,
                               "Complete intersection n:d1,d2,... (e.g. 3:4)");
    auto* homog = sub->add_option("--homog", opts.homog, "Homogeneous space T:rank:node");
    auto* abelian = sub->add_option("--abelian", opts.abelian, "Abelian variety n:Hn");
    auto* todd = sub->add_option("--todd-file", opts.todd_file,
                                 "Chern data key=value file (n, Hn, c1H, c1sqH, c2H, c1c2H, chiO)");
    auto* entries = sub->add_option("--todd-entries", opts.todd_entries,
                                    "Direct Todd entries a0,...,an (required route for n = 5)");
    auto* poly = sub->add_option("--poly-file", opts.poly_file,
                                 "Polynomial file: a_0..a_n space-separated rationals");
    ci->excludes(homog, abelian, todd, entries, poly);
    homog->excludes(abelian, todd, entries, poly);
    abelian->excludes(todd, entries, poly);
    todd->excludes(entries, poly);
    entries->excludes(poly);
}

struct ResolvedSource {
    Polynomial poly;
    Json description;
    std::vector<std::string> warnings;
};

ResolvedSource resolve_source(const SourceOpts& opts) {
    ResolvedSource source;
    if (!opts.ci.empty()) {
        MultiDegree md = parse_ci_shorthand(opts.ci);
        source.poly = f_poly(md);
        source.description = ci_case_to_json(md);
        source.description["kind"] = "complete_intersection";
    } else if (!opts.homog.empty()) {
        RootDatum rd = parse_homog_shorthand(opts.homog);
        source.poly = hilbert_homogeneous(rd);
        source.description = Json{{"kind", "homogeneous"},
                                  {"type", std::string(1, lie_type_to_char(rd.type))},
                                  {"rank", rd.rank},
                                  {"node", rd.marked_node}};
    } else if (!opts.abelian.empty()) {
        auto parts = split(opts.abelian, ':');
        if (parts.size() != 2) {
            throw std::invalid_argument("expected n:Hn but got '" + opts.abelian + "'");
        }
        int n = parse_int(parts[0], "dimension");
        Rational hn = parse_rational_or_throw(parts[1], "H^n");
        source.poly = abelian_poly(n, hn);
        source.description =
            Json{{"kind", "abelian"}, {"n", n}, {"Hn", rational_to_string(hn)}};
    } else if (!opts.todd_file.empty()) {
        ChernData cd = parse_chern_file(opts.todd_file);
        source.poly = todd_poly(chern_to_todd(cd));
        source.description = Json{{"kind", "todd"}, {"n", cd.n}};
        source.warnings = chern_consistency_warnings(cd);
    } else if (!opts.todd_entries.empty()) {
        ToddVector tv = parse_todd_entries(opts.todd_entries);
        source.poly = todd_poly(tv);
        source.description = Json{{"kind", "todd"}, {"n", tv.n}};
    } else if (!opts.poly_file.empty()) {
        ParsedPolynomial parsed = parse_poly_file(opts.poly_file);
        source.poly = parsed.poly;
        source.description = Json{{"kind", "poly_file"}, {"path", opts.poly_file}};
        if (parsed.trimmed_trailing_zeros) {
            source.warnings.push_back("input polynomial had trailing zero coefficients");
        }
    } else {
        throw std::invalid_argument(
            "no polynomial source given (--ci/--homog/--abelian/--todd-file/--todd-entries/"
            "--poly-file)");
    }
    auto integrality = integrality_warnings(source.poly);
    source.warnings.insert(source.warnings.end(), integrality.begin(), integrality.end());
    return source;
}

// --- subcommand drivers -----------------------------------------------------

struct CiArgs {
    CommonOpts common;
    int n = 0;
    std::string degrees;
    bool criterion = false;
};

int run_ci(const CiArgs& args) {
    std::vector<int> degrees = parse_degree_list(args.degrees);
    std::sort(degrees.begin(), degrees.end());
    // dimension-0 complete intersections (k = n) are allowed here
    if (args.n < static_cast<int>(degrees.size())) {
        throw std::invalid_argument("ci: requires n >= number of degrees");
    }
    int degree_sum = 0;
    for (int d : degrees) degree_sum += d;
    bool fano_cy = degree_sum <= args.n + 1;

    Json j;
    j["n"] = args.n;
    j["degrees"] = degrees;
    j["dim"] = args.n - static_cast<int>(degrees.size());
    j["fano_cy"] = fano_cy;
    Polynomial p = f_poly(args.n, degrees);
    j["poly"] = poly_to_json(p);
    NonnegResult nonneg = nonneg_check(args.n, degrees);
    j.update(nonneg_to_json(nonneg));
    if (args.criterion) {
        j["criterion_report"] = criterion_report_to_json(check_criterion(p));
    }
    emit(args.common, j);
    // A Fano/Calabi-Yau multidegree with a negative coefficient would refute
    // the non-negativity theorem.
    if (fano_cy && !nonneg.ok) return kExitMathFailure;
    return kExitOk;
}

struct VerifyArgs {
    CommonOpts common;
    int n_max = 0;
    int t_max = 20;
    int ell_max = 0;
};

int run_verify_cmd(const VerifyArgs& args) {
    VerifyReport report = run_verify({.n_max = args.n_max,
                                      .t_max = args.t_max,
                                      .ell_max = args.ell_max,
                                      .workers = args.common.workers});
    write_report(args.common,
                 args.common.format == "tsv" ? report.to_tsv() : report.to_json());
    std::cout << report.summary() << '\n';
    return report.failures() == 0 ? kExitOk : kExitMathFailure;
}

struct HomogArgs {
    CommonOpts common;
    std::string type;
    int rank = 0;
    int node = 0;
    bool criterion = false;
};

int run_homog(const HomogArgs& args) {
    if (args.type.size() != 1) {
        throw std::invalid_argument("--type expects a single letter A..G");
    }
    RootDatum rd{lie_type_from_char(args.type[0]), args.rank, args.node};
    RootTable table = build_root_table(rd);
    Polynomial p = hilbert_homogeneous(table);
    Json j;
    j["type"] = std::string(1, lie_type_to_char(rd.type));
    j["rank"] = rd.rank;
    j["node"] = rd.marked_node;
    j["dim"] = dim_homogeneous(table);
    j["poly"] = poly_to_json(p);
    Json factors = Json::array();
    for (auto [lambda, rho] : factored_form(table)) {
        factors.push_back(Json::array({lambda, rho}));
    }
    j["factors"] = std::move(factors);
    if (args.criterion) {
        j["criterion_report"] = criterion_report_to_json(check_criterion(p));
    }
    emit(args.common, j);
    return kExitOk;
}

struct ToddArgs {
    CommonOpts common;
    std::string file;
    std::string entries;
    int n = 0;
    std::string Hn, c1H, c1sqH, c2H, c1c2H, chiO;
    bool criterion = false;
};

int run_todd(const ToddArgs& args) {
    ToddVector tv;
    std::vector<std::string> warnings;
    if (!args.entries.empty()) {
        tv = parse_todd_entries(args.entries);
    } else {
        ChernData cd;
        if (!args.file.empty()) {
            cd = parse_chern_file(args.file);
        } else {
            cd.n = args.n;
            auto field = [](const std::string& text, const char* name) {
                return text.empty() ? Rational(0) : parse_rational_or_throw(text, name);
            };
            cd.Hn = field(args.Hn, "Hn");
            cd.c1H = field(args.c1H, "c1H");
            cd.c1sqH = field(args.c1sqH, "c1sqH");
            cd.c2H = field(args.c2H, "c2H");
            cd.c1c2H = field(args.c1c2H, "c1c2H");
            cd.chiO = field(args.chiO, "chiO");
        }
        tv = chern_to_todd(cd);
        warnings = chern_consistency_warnings(cd);
    }
    Polynomial p = todd_poly(tv);
    auto integrality = integrality_warnings(p);
    warnings.insert(warnings.end(), integrality.begin(), integrality.end());

    Json j;
    j["n"] = tv.n;
    Json entries = Json::array();
    for (const auto& e : tv.entries) entries.push_back(rational_to_json(e));
    j["entries"] = std::move(entries);
    j["poly"] = poly_to_json(p);
    j["warnings"] = warnings;
    if (args.criterion) {
        j["criterion_report"] = criterion_report_to_json(check_criterion(p));
    }
    emit(args.common, j);
    return kExitOk;
}

struct AbelianArgs {
    CommonOpts common;
    int n = 0;
    std::string Hn;
    bool criterion = false;
};

int run_abelian(const AbelianArgs& args) {
    Rational hn = parse_rational_or_throw(args.Hn, "Hn");
    Polynomial p = abelian_poly(args.n, hn);
    Json j;
    j["n"] = args.n;
    j["Hn"] = rational_to_string(hn);
    j["poly"] = poly_to_json(p);
    if (args.criterion) {
        j["criterion_report"] = criterion_report_to_json(check_criterion(p));
    }
    emit(args.common, j);
    return kExitOk;
}

struct CriterionArgs {
    CommonOpts common;
    SourceOpts source;
    int k_max = 10;
};

int run_criterion(const CriterionArgs& args) {
    ResolvedSource source = resolve_source(args.source);
    CriterionReport report = check_criterion(source.poly);
    Json j;
    j["source"] = source.description;
    j["poly"] = poly_to_json(source.poly);
    j["warnings"] = source.warnings;
    j["criterion_report"] = criterion_report_to_json(report);
    j["doubling_bound"] = doubling_bound_check(source.poly);
    j["monotone"] = monotone_result_to_json(monotone_check(source.poly, args.k_max));
    emit(args.common, j);
    return report.criterion ? kExitOk : kExitMathFailure;
}

struct CertifyArgs {
    CommonOpts common;
    SourceOpts source;
    int ell = 1;
    bool picard_rank_one = false;
    bool minus_k_nef = false;
};

int run_certify(const CertifyArgs& args) {
    ResolvedSource source = resolve_source(args.source);
    CriterionReport report = check_criterion(source.poly);
    Json j;
    j["source"] = source.description;
    j["poly"] = poly_to_json(source.poly);
    j["warnings"] = source.warnings;
    j["criterion_report"] = criterion_report_to_json(report);
    if (!report.criterion) {
        emit(args.common, j);
        return kExitMathFailure;
    }
    StabilityCertificate cert = destabilizing_search(source.poly, args.ell);
    cert.assume_picard_rank_one = args.picard_rank_one;
    cert.assume_minus_k_nef = args.minus_k_nef;
    if (poly_eval_int(source.poly, args.ell) >= 2) {
        j["syzygy"] = syzygy_data_to_json(syzygy_data(source.poly, args.ell));
    }
    j["certificate"] = certificate_to_json(cert);
    emit(args.common, j);
    switch (cert.verdict) {
        case CertVerdict::PassStrict: return kExitOk;
        case CertVerdict::PassWeakAtK1: return kExitWeak;
        case CertVerdict::Fail: return kExitMathFailure;
    }
    return kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hilbert polynomials and syzygy-bundle stability certificates"};
    app.require_subcommand(1);

    CiArgs ci_args;
    auto* ci = app.add_subcommand("ci", "Complete-intersection Hilbert polynomial");
    add_common(ci, ci_args.common, "json");
    ci->add_option("--n", ci_args.n, "Ambient projective dimension")->required();
    ci->add_option("--degrees", ci_args.degrees, "Comma-separated hypersurface degrees");
    ci->add_flag("--criterion", ci_args.criterion, "Include the stability criterion report");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Exhaustive verification campaign");
    add_common(verify, verify_args.common, "tsv");
    verify->add_option("--n-max", verify_args.n_max, "Largest ambient dimension")->required();
    verify->add_option("--t-max", verify_args.t_max, "Oracle comparison range");
    verify->add_option("--ell-max", verify_args.ell_max,
                       "Also demand PASS_STRICT certificates for ell = 1..ell-max");

    HomogArgs homog_args;
    auto* homog = app.add_subcommand("homog", "Rational homogeneous space Hilbert polynomial");
    add_common(homog, homog_args.common, "json");
    homog->add_option("--type", homog_args.type, "Lie type A|B|C|D|E|F|G")->required();
    homog->add_option("--rank", homog_args.rank, "Rank")->required();
    homog->add_option("--node", homog_args.node, "Marked node (Bourbaki numbering)")->required();
    homog->add_flag("--criterion", homog_args.criterion, "Include the criterion report");

    ToddArgs todd_args;
    auto* todd = app.add_subcommand("todd", "Hilbert polynomial from Todd/Chern data (dim 2..5)");
    add_common(todd, todd_args.common, "json");
    todd->add_option("--file", todd_args.file, "Chern data key=value file");
    todd->add_option("--entries", todd_args.entries,
                     "Direct Todd entries a0,...,an (required route for n = 5)");
    todd->add_option("--n", todd_args.n, "Dimension (with Chern flags)");
    todd->add_option("--Hn", todd_args.Hn, "H^n");
    todd->add_option("--c1H", todd_args.c1H, "c_1 . H^{n-1}");
    todd->add_option("--c1sqH", todd_args.c1sqH, "c_1^2 . H^{n-2}");
    todd->add_option("--c2H", todd_args.c2H, "c_2 . H^{n-2}");
    todd->add_option("--c1c2H", todd_args.c1c2H, "c_1 c_2 . H^{n-3}");
    todd->add_option("--chiO", todd_args.chiO, "chi(O_X)");
    todd->add_flag("--criterion", todd_args.criterion, "Include the criterion report");

    AbelianArgs abelian_args;
    auto* abelian = app.add_subcommand("abelian", "Abelian-variety Hilbert polynomial");
    add_common(abelian, abelian_args.common, "json");
    abelian->add_option("--n", abelian_args.n, "Dimension")->required();
    abelian->add_option("--Hn", abelian_args.Hn, "H^n")->required();
    abelian->add_flag("--criterion", abelian_args.criterion, "Include the criterion report");

    CriterionArgs criterion_args;
    auto* criterion =
        app.add_subcommand("criterion", "Stability criterion and monotonicity analysis");
    add_common(criterion, criterion_args.common, "json");
    add_source_options(criterion, criterion_args.source);
    criterion->add_option("--k-max", criterion_args.k_max, "Monotone table size")
        ->check(CLI::PositiveNumber);

    CertifyArgs certify_args;
    auto* certify = app.add_subcommand("certify", "Stability certificate for L = H^ell");
    add_common(certify, certify_args.common, "json");
    add_source_options(certify, certify_args.source);
    certify->add_option("--ell", certify_args.ell, "Twist: L = H^ell")
        ->required()
        ->check(CLI::PositiveNumber);
    certify->add_flag("--picard-rank-one", certify_args.picard_rank_one,
                      "Echo the Picard-rank-one hypothesis into the certificate");
    certify->add_flag("--minus-k-nef", certify_args.minus_k_nef,
                      "Echo the -K nef hypothesis into the certificate");

    try {
        app.parse(argc, argv);
        for (auto& args : {&ci_args.common, &verify_args.common, &homog_args.common,
                           &todd_args.common, &abelian_args.common, &criterion_args.common,
                           &certify_args.common}) {
            if (args->workers == 0) args->workers = default_workers();
        }
        if (ci->parsed()) return run_ci(ci_args);
        if (verify->parsed()) return run_verify_cmd(verify_args);
        if (homog->parsed()) return run_homog(homog_args);
        if (todd->parsed()) return run_todd(todd_args);
        if (abelian->parsed()) return run_abelian(abelian_args);
        if (criterion->parsed()) return run_criterion(criterion_args);
        if (certify->parsed()) return run_certify(certify_args);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
