// Command line surface: existence checks, single-sequence classification,
// full per-dimension enumeration, moduli dimensions, group orders, and the
// headline-number tables. Exit codes: 0 success or pass, 1 checked-and-failed,
// 2 usage error, 3 resource budget exceeded.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bplink/errors.hpp"
#include "bplink/numtheory.hpp"
#include "bplink/search.hpp"
#include "bplink/serialize.hpp"

namespace {

using namespace bplink;

std::vector<BigInt> parse_sequence(const std::vector<std::string>& args) {
    if (args.size() < 3) throw std::invalid_argument("need at least 3 exponents");
    std::vector<BigInt> out;
    for (const std::string& s : args) {
        bool digits = !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        });
        if (!digits) throw std::invalid_argument("not a positive integer: " + s);
        out.emplace_back(s);
        if (out.back() < 2) throw std::invalid_argument("exponents must be at least 2: " + s);
    }
    return out;
}

std::string join_exponents(const std::vector<BigInt>& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        out += a[i].str();
    }
    return out;
}

double approx(const Rational& r) { return r.convert_to<double>(); }

unsigned default_jobs() {
    if (const char* env = std::getenv("BPLINK_JOBS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    return 1;
}

const char* tri_state_name(TriState t) {
    switch (t) {
        case TriState::Yes: return "yes";
        case TriState::No: return "no";
        default: return "unknown";
    }
}

void print_certificate(std::ostream& os, const ExponentSequence& seq, const KECertificate& cert,
                       bool with_float) {
    os << "a: " << join_exponents(seq.a) << '\n';
    os << "m: " << seq.m() << '\n';
    os << "link_dim: " << seq.link_dim() << '\n';
    os << "fano_sum: " << rational_to_string(cert.fano_sum);
    if (with_float) os << " (~" << approx(cert.fano_sum) << ')';
    os << '\n';
    os << "upper_bound: " << rational_to_string(cert.upper_bound);
    if (with_float) os << " (~" << approx(cert.upper_bound) << ')';
    os << '\n';
    os << "pair_mode: " << to_string(cert.pair_mode) << '\n';
    if (cert.min_term_kind == MinTermKind::ReciprocalA)
        os << "min_term: 1/a[" << cert.min_term_indices.first << "]\n";
    else
        os << "min_term: 1/(b[" << cert.min_term_indices.first << "]*b["
           << cert.min_term_indices.second << "])\n";
    os << "passes_fano: " << (cert.passes_fano ? "true" : "false") << '\n';
    os << "passes_upper: " << (cert.passes_upper ? "true" : "false") << '\n';
    os << "passes: " << (cert.passes ? "true" : "false") << '\n';
}

void print_record(std::ostream& os, const EnumerationRecord& rec, bool with_float) {
    print_certificate(os, rec.seq, rec.cert, with_float);
    os << "sphere: " << (rec.sphere.is_sphere ? "true" : "false") << '\n';
    os << "criterion: " << to_string(rec.sphere.criterion) << '\n';
    os << "tau: " << (rec.tau ? rec.tau->str() : "n/a") << '\n';
    os << "bp_class: " << (rec.bp_class ? rec.bp_class->str() : "n/a");
    if (rec.bp_unoriented) os << " (unoriented " << rec.bp_unoriented->str() << ')';
    os << '\n';
    os << "kervaire: " << to_string(rec.arf.cls);
    if (rec.arf.cls == ArfClass::KervaireSphere)
        os << " (exotic: " << tri_state_name(rec.arf.exotic) << ')';
    os << '\n';
    os << "moduli_real_dim: " << (rec.moduli_real_dim ? rec.moduli_real_dim->str() : "n/a")
       << '\n';
    os << "contact_excluded: " << (rec.contact_excluded ? "true" : "false") << '\n';
}

struct CheckArgs {
    std::vector<std::string> exponents;
    std::string pair_mode = "include_diagonal";
    bool as_json = false;
    bool with_float = false;
};

int cmd_check(const CheckArgs& args) {
    ExponentSequence seq = derive(parse_sequence(args.exponents));
    KECertificate cert = check_ke(seq, pair_mode_from_string(args.pair_mode));
    if (args.as_json) {
        nlohmann::ordered_json j;
        j["a"] = join_exponents(seq.a);
        j["m"] = seq.m();
        j["link_dim"] = seq.link_dim();
        j["fano_sum"] = rational_to_string(cert.fano_sum);
        j["upper_bound"] = rational_to_string(cert.upper_bound);
        j["pair_mode"] = to_string(cert.pair_mode);
        j["passes_fano"] = cert.passes_fano;
        j["passes_upper"] = cert.passes_upper;
        j["passes"] = cert.passes;
        if (args.with_float) {
            j["fano_sum_approx"] = approx(cert.fano_sum);
            j["upper_bound_approx"] = approx(cert.upper_bound);
        }
        std::cout << j.dump() << '\n';
    } else {
        print_certificate(std::cout, seq, cert, args.with_float);
    }
    return cert.passes ? 0 : 1;
}

struct ClassifyArgs {
    std::vector<std::string> exponents;
    std::string pair_mode = "include_diagonal";
    std::string method = "dp";
    bool as_json = false;
    bool with_float = false;
    bool with_moduli = true;
};

int cmd_classify(const ClassifyArgs& args) {
    ExponentSequence seq = derive(parse_sequence(args.exponents));
    ClassifyOptions options;
    options.pair_mode = pair_mode_from_string(args.pair_mode);
    options.with_moduli = args.with_moduli;
    if (args.method == "brute") options.signature_method = SignatureMethod::BruteLattice;
    else if (args.method == "zagier") options.signature_method = SignatureMethod::ZagierFloat;
    else options.signature_method = SignatureMethod::PolynomialDP;
    EnumerationRecord rec = classify(seq, options);
    if (args.as_json) std::cout << record_to_json_line(rec) << '\n';
    else print_record(std::cout, rec, args.with_float);
    return 0;
}

struct EnumerateArgs {
    long dim = 5;
    std::string pair_mode = "include_diagonal";
    std::string format = "json";
    std::string out_file;
    std::string checkpoint;
    std::int64_t max_last = 0;
    unsigned jobs = 0;
    std::uint64_t halt_after_units = 0;
    bool with_moduli = true;
};

int cmd_enumerate(const EnumerateArgs& args) {
    EnumerateOptions options;
    options.pair_mode = pair_mode_from_string(args.pair_mode);
    options.jobs = args.jobs ? args.jobs : default_jobs();
    if (args.max_last) options.max_last = args.max_last;
    options.checkpoint_path = args.checkpoint;
    options.halt_after_units = args.halt_after_units;
    options.with_moduli = args.with_moduli;

    std::ofstream file;
    if (!args.out_file.empty()) {
        file.open(args.out_file, std::ios::trunc);
        if (!file) throw std::invalid_argument("cannot open output file: " + args.out_file);
    }
    std::ostream& out = args.out_file.empty() ? std::cout : file;

    const bool csv = args.format == "csv";
    if (csv) out << csv_header() << '\n';
    EnumerationSummary summary = enumerate(args.dim, options, [&](const EnumerationRecord& rec) {
        out << (csv ? record_to_csv_row(rec) : record_to_json_line(rec)) << '\n';
    });
    out.flush();

    std::cerr << "summary: dim=" << summary.link_dim
              << " pair_mode=" << to_string(summary.pair_mode) << " total=" << summary.total
              << " alternate_total=" << summary.alternate_total
              << " partial=" << (summary.partial ? "true" : "false")
              << " contact_violations=" << summary.contact_violations
              << " tau_mod8_violations=" << summary.tau_mod8_violations << '\n';
    std::cerr << "class_counts:";
    for (const auto& [label, count] : summary.class_counts)
        std::cerr << ' ' << label << '=' << count;
    std::cerr << '\n';
    return 0;
}

struct ModuliArgs {
    std::vector<std::string> exponents;
    bool as_json = false;
    bool force_dp = false;
};

int cmd_moduli(const ModuliArgs& args) {
    ExponentSequence seq = derive(parse_sequence(args.exponents));
    ModuliReport report = moduli_dimension(
        seq, args.force_dp ? ModuliStrategy::ForceDP : ModuliStrategy::Auto);
    if (args.as_json) {
        nlohmann::ordered_json j;
        j["a"] = join_exponents(seq.a);
        j["dim_sections_d"] = report.dim_sections_d.str();
        nlohmann::ordered_json parts = nlohmann::ordered_json::array();
        for (const BigInt& v : report.dim_sections_wi) parts.push_back(v.str());
        j["dim_sections_wi"] = parts;
        j["complex_dim"] = report.complex_dim.str();
        j["real_dim"] = report.real_dim.str();
        j["exact"] = report.exact;
        j["clamped"] = report.clamped;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "a: " << join_exponents(seq.a) << '\n';
        std::cout << "dim_sections_d: " << report.dim_sections_d << '\n';
        std::cout << "dim_sections_wi:";
        for (const BigInt& v : report.dim_sections_wi) std::cout << ' ' << v;
        std::cout << '\n';
        std::cout << "complex_dim: " << report.complex_dim << '\n';
        std::cout << "real_dim: " << report.real_dim << '\n';
        std::cout << "exact: " << (report.exact ? "true" : "false") << '\n';
        std::cout << "clamped: " << (report.clamped ? "true" : "false") << '\n';
    }
    return 0;
}

int cmd_bp_order(unsigned n) {
    if (n >= 4 && n % 4 == 0) {
        std::cout << bp_order(n) << '\n';
        return 0;
    }
    if (n >= 6 && n % 4 == 2) {
        switch (bp_even_status(n)) {
            case BpEvenStatus::Zero: std::cout << "1\n"; break;
            case BpEvenStatus::Z2: std::cout << "2\n"; break;
            default: std::cout << "unknown\n"; break;
        }
        return 0;
    }
    throw std::invalid_argument("bp-order: index must be 4k (k >= 1) or 4k+2 (k >= 1)");
}

int cmd_sylvester(unsigned k) {
    if (k < 1 || k > 30) throw std::invalid_argument("sylvester: k must be in [1, 30]");
    for (unsigned i = 1; i <= k; ++i) std::cout << sylvester(i) << '\n';
    return 0;
}

struct TablesArgs {
    bool quick = false;
    unsigned jobs = 0;
};

int cmd_tables(const TablesArgs& args) {
    unsigned jobs = args.jobs ? args.jobs : default_jobs();
    bool all_pass = true;
    auto report = [&](const std::string& line, bool pass) {
        std::cout << line << (pass ? " PASS" : " FAIL") << '\n';
        all_pass = all_pass && pass;
    };

    {
        BigInt o8 = bp_order(8), o12 = bp_order(12), o16 = bp_order(16);
        report("bp orders (8,12,16): " + o8.str() + " " + o12.str() + " " + o16.str(),
               o8 == 28 && o12 == 992 && o16 == 8128);
    }
    {
        const char* expected[] = {"2", "3", "7", "43", "1807", "3263443", "10650056950807"};
        std::string line = "sylvester c1..c7:";
        bool pass = true;
        for (unsigned i = 1; i <= 7; ++i) {
            BigInt c = sylvester(i);
            line += ' ' + c.str();
            pass = pass && c.str() == expected[i - 1];
        }
        report(line, pass);
    }
    {
        ModuliReport r = moduli_dimension(derive({2, 3, 7, 35}));
        report("moduli real dim (2,3,7,35): " + r.real_dim.str(), r.real_dim == 10);
    }
    {
        ModuliReport r = moduli_dimension(derive({2, 3, 7, 43, 1333}));
        report("moduli real dim (2,3,7,43,1333): " + r.real_dim.str(), r.real_dim == 82);
    }
    {
        std::vector<ExponentSequence> fam = generate_family(FamilyKind::ModuliGiant, 8);
        bool pass = fam.size() == 1;
        std::string shown = "none";
        if (pass) {
            ModuliReport r = moduli_dimension(fam.front());
            shown = r.real_dim.str();
            pass = r.real_dim == BigInt("21300113901610");
        }
        report("moduli real dim (sylvester giant, m=8): " + shown, pass);
    }
    {
        EnumerateOptions options;
        options.jobs = jobs;
        options.with_moduli = false;
        EnumerationSummary s = enumerate(5, options, [](const EnumerationRecord&) {});
        report("dim-5 enumeration total: " + s.total.str(), s.total == 68);
    }
    if (args.quick) {
        std::cout << "dim-7 enumeration: skipped (--quick)\n";
    } else {
        EnumerateOptions options;
        options.jobs = jobs;
        options.with_moduli = false;
        EnumerationSummary s = enumerate(7, options, [](const EnumerationRecord&) {});
        bool pass = s.total == 8610 && s.class_counts.size() == 28;
        BigInt lo = 0, hi = 0;
        bool first = true;
        for (const auto& [label, count] : s.class_counts) {
            if (first) { lo = hi = count; first = false; }
            if (count < lo) lo = count;
            if (count > hi) hi = count;
        }
        pass = pass && !first && lo >= 231 && hi <= 452;
        report("dim-7 enumeration total: " + s.total.str() + ", classes: " +
                   std::to_string(s.class_counts.size()) + ", count range: [" + lo.str() +
                   ", " + hi.str() + "]",
               pass);
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision toolkit for existence and topology of Brieskorn-Pham links"};
    app.require_subcommand(1);

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "decide the existence inequalities");
    check->add_option("exponents", check_args.exponents, "exponent sequence (>= 3 integers >= 2)")
        ->required()
        ->expected(-1);
    check->add_option("--pair-mode", check_args.pair_mode, "include_diagonal or off_diagonal")
        ->check(CLI::IsMember({"include_diagonal", "off_diagonal"}));
    check->add_flag("--json", check_args.as_json, "emit the certificate as JSON");
    check->add_flag("--float", check_args.with_float, "add decimal approximations");

    ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand("classify", "full topological classification");
    classify
        ->add_option("exponents", classify_args.exponents,
                     "exponent sequence (>= 4 integers >= 2)")
        ->required()
        ->expected(-1);
    classify->add_option("--pair-mode", classify_args.pair_mode)
        ->check(CLI::IsMember({"include_diagonal", "off_diagonal"}));
    classify->add_option("--method", classify_args.method, "signature engine")
        ->check(CLI::IsMember({"brute", "dp", "zagier"}));
    classify->add_flag("--json", classify_args.as_json, "emit the record as a JSON line");
    classify->add_flag("--float", classify_args.with_float, "add decimal approximations");
    classify->add_flag("!--no-moduli", classify_args.with_moduli, "skip the moduli dimension");

    EnumerateArgs enum_args;
    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "emit every admissible homotopy-sphere sequence");
    enumerate_cmd->add_option("--dim", enum_args.dim, "odd link dimension >= 5")->required();
    enumerate_cmd->add_option("--pair-mode", enum_args.pair_mode)
        ->check(CLI::IsMember({"include_diagonal", "off_diagonal"}));
    enumerate_cmd->add_option("--out", enum_args.format, "record format")
        ->check(CLI::IsMember({"json", "csv"}));
    enumerate_cmd->add_option("--out-file", enum_args.out_file, "write records to a file");
    enumerate_cmd->add_option("--checkpoint", enum_args.checkpoint,
                              "checkpoint file for resumable runs");
    enumerate_cmd->add_option("--max-last", enum_args.max_last,
                              "cap the final exponent: partial run")
        ->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--jobs", enum_args.jobs, "worker threads (default $BPLINK_JOBS or 1)");
    enumerate_cmd->add_flag("!--no-moduli", enum_args.with_moduli, "skip moduli dimensions");
    enumerate_cmd
        ->add_option("--halt-after-units", enum_args.halt_after_units,
                     "stop after this many completed search units")
        ->group("");

    ModuliArgs moduli_args;
    CLI::App* moduli = app.add_subcommand("moduli", "moduli dimension of the solution space");
    moduli->add_option("exponents", moduli_args.exponents, "exponent sequence")
        ->required()
        ->expected(-1);
    moduli->add_flag("--json", moduli_args.as_json, "emit the report as JSON");
    moduli->add_flag("--force-dp", moduli_args.force_dp, "bypass the closed-form fast path");

    unsigned bp_n = 0;
    CLI::App* bp = app.add_subcommand("bp-order", "order of the group of boundary spheres");
    bp->add_option("n", bp_n, "group index: 4k for the cyclic orders, 4k+2 for the 2-torsion status")
        ->required();

    unsigned sylv_k = 7;
    CLI::App* sylv = app.add_subcommand("sylvester", "print the doubly exponential sequence");
    sylv->add_option("k", sylv_k, "number of terms (1..30)")->required();

    TablesArgs tables_args;
    CLI::App* tables = app.add_subcommand("tables", "reproduce the headline numbers");
    tables->add_flag("--quick", tables_args.quick, "skip the dim-7 enumeration");
    tables->add_option("--jobs", tables_args.jobs, "worker threads (default $BPLINK_JOBS or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(check_args);
        if (app.got_subcommand(classify)) return cmd_classify(classify_args);
        if (app.got_subcommand(enumerate_cmd)) return cmd_enumerate(enum_args);
        if (app.got_subcommand(moduli)) return cmd_moduli(moduli_args);
        if (app.got_subcommand(bp)) return cmd_bp_order(bp_n);
        if (app.got_subcommand(sylv)) return cmd_sylvester(sylv_k);
        if (app.got_subcommand(tables)) return cmd_tables(tables_args);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const PrecisionInsufficient& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
