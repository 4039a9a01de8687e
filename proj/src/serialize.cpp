#include "bplink/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bplink/numtheory.hpp"

namespace bplink {

namespace {

using nlohmann::ordered_json;

std::string bigint_to_string(const BigInt& v) { return v.str(); }

BigInt bigint_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("bigint_from_string: empty string");
    return BigInt(s);
}

std::string join_exponents(const std::vector<BigInt>& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        out += a[i].str();
    }
    return out;
}

std::vector<BigInt> split_exponents(const std::string& s) {
    std::vector<BigInt> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(bigint_from_string(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(bigint_from_string(cur));
    return out;
}

std::string csv_quote(const std::string& raw) {
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_row(const std::string& row) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
        char c = row[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < row.size() && row[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r' && c != '\n') {
            cur += c;
        }
    }
    fields.push_back(cur);
    if (quoted) throw std::invalid_argument("record_from_csv_row: unterminated quote");
    return fields;
}

TriState exotic_for(ArfClass cls, long link_dim) {
    if (cls != ArfClass::KervaireSphere) return TriState::No;
    switch (bp_even_status(static_cast<unsigned>(link_dim + 1))) {
        case BpEvenStatus::Zero: return TriState::No;
        case BpEvenStatus::Z2: return TriState::Yes;
        default: return TriState::Unknown;
    }
}

// Rebuild a record from its serialized fields; derived sequence data comes
// from the exponents, stored values are kept verbatim.
EnumerationRecord rebuild(std::vector<BigInt> a, const Rational& fano_sum,
                          const Rational& upper_bound, bool passes, bool sphere,
                          SphereCriterion criterion, const std::optional<BigInt>& tau,
                          const std::optional<BigInt>& bp_class, ArfClass kervaire,
                          const std::optional<BigInt>& moduli_real_dim,
                          bool contact_excluded) {
    EnumerationRecord rec;
    rec.seq = derive(std::move(a));
    rec.cert.fano_sum = fano_sum;
    rec.cert.upper_bound = upper_bound;
    rec.cert.pair_mode = PairMode::IncludeDiagonal;
    rec.cert.min_term_kind = MinTermKind::ReciprocalA;
    rec.cert.min_term_indices = {0, 0};
    rec.cert.passes_fano = fano_sum > 1;
    rec.cert.passes_upper = fano_sum < upper_bound;
    rec.cert.passes = passes;
    rec.sphere = {sphere, criterion};
    rec.tau = tau;
    rec.bp_class = bp_class;
    if (bp_class) {
        BigInt order = bp_order(static_cast<unsigned>(rec.seq.link_dim() + 1));
        BigInt c = *bp_class % order;
        if (c < 0) c += order;
        rec.bp_unoriented = c < order - c ? c : order - c;
    }
    rec.arf = {kervaire, exotic_for(kervaire, rec.seq.link_dim())};
    rec.moduli_real_dim = moduli_real_dim;
    rec.contact_excluded = contact_excluded;
    return rec;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(bigint_from_string(s));
    return Rational(bigint_from_string(s.substr(0, slash)),
                    bigint_from_string(s.substr(slash + 1)));
}

const char* to_string(PairMode mode) {
    return mode == PairMode::IncludeDiagonal ? "include_diagonal" : "off_diagonal";
}

const char* to_string(SphereCriterion criterion) {
    switch (criterion) {
        case SphereCriterion::TwoIsolated: return "TwoIsolated";
        case SphereCriterion::EvenComponentRule: return "EvenComponentRule";
        default: return "NotSphere";
    }
}

const char* to_string(ArfClass cls) {
    switch (cls) {
        case ArfClass::Standard: return "Standard";
        case ArfClass::KervaireSphere: return "KervaireSphere";
        default: return "NotApplicable";
    }
}

const char* to_string(SignatureMethod method) {
    switch (method) {
        case SignatureMethod::BruteLattice: return "brute";
        case SignatureMethod::PolynomialDP: return "dp";
        default: return "zagier";
    }
}

PairMode pair_mode_from_string(const std::string& s) {
    if (s == "include_diagonal") return PairMode::IncludeDiagonal;
    if (s == "off_diagonal") return PairMode::OffDiagonalOnly;
    throw std::invalid_argument("unknown pair mode: " + s);
}

SphereCriterion sphere_criterion_from_string(const std::string& s) {
    if (s == "TwoIsolated") return SphereCriterion::TwoIsolated;
    if (s == "EvenComponentRule") return SphereCriterion::EvenComponentRule;
    if (s == "NotSphere") return SphereCriterion::NotSphere;
    throw std::invalid_argument("unknown sphere criterion: " + s);
}

ArfClass arf_class_from_string(const std::string& s) {
    if (s == "Standard") return ArfClass::Standard;
    if (s == "KervaireSphere") return ArfClass::KervaireSphere;
    if (s == "NotApplicable") return ArfClass::NotApplicable;
    throw std::invalid_argument("unknown Arf class: " + s);
}

nlohmann::ordered_json record_to_json(const EnumerationRecord& record) {
    ordered_json j;
    j["a"] = join_exponents(record.seq.a);
    j["m"] = record.seq.m();
    j["link_dim"] = record.seq.link_dim();
    j["fano_sum"] = rational_to_string(record.cert.fano_sum);
    j["upper_bound"] = rational_to_string(record.cert.upper_bound);
    j["passes"] = record.cert.passes;
    j["sphere"] = record.sphere.is_sphere;
    j["criterion"] = to_string(record.sphere.criterion);
    if (record.tau) j["tau"] = bigint_to_string(*record.tau);
    else j["tau"] = nullptr;
    if (record.bp_class) j["bp_class"] = bigint_to_string(*record.bp_class);
    else j["bp_class"] = nullptr;
    j["kervaire"] = to_string(record.arf.cls);
    if (record.moduli_real_dim) j["moduli_real_dim"] = bigint_to_string(*record.moduli_real_dim);
    else j["moduli_real_dim"] = nullptr;
    j["contact_excluded"] = record.contact_excluded;
    return j;
}

std::string record_to_json_line(const EnumerationRecord& record) {
    return record_to_json(record).dump();
}

std::string csv_header() {
    return "a,m,link_dim,fano_sum,upper_bound,passes,sphere,criterion,tau,"
           "bp_class,kervaire,moduli_real_dim,contact_excluded";
}

std::string record_to_csv_row(const EnumerationRecord& record) {
    std::ostringstream out;
    out << csv_quote(join_exponents(record.seq.a)) << ',' << record.seq.m() << ','
        << record.seq.link_dim() << ',' << rational_to_string(record.cert.fano_sum) << ','
        << rational_to_string(record.cert.upper_bound) << ','
        << (record.cert.passes ? "true" : "false") << ','
        << (record.sphere.is_sphere ? "true" : "false") << ','
        << to_string(record.sphere.criterion) << ','
        << (record.tau ? bigint_to_string(*record.tau) : "") << ','
        << (record.bp_class ? bigint_to_string(*record.bp_class) : "") << ','
        << to_string(record.arf.cls) << ','
        << (record.moduli_real_dim ? bigint_to_string(*record.moduli_real_dim) : "") << ','
        << (record.contact_excluded ? "true" : "false");
    return out.str();
}

EnumerationRecord record_from_json_line(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    std::optional<BigInt> tau, bp_class, moduli;
    if (!j.at("tau").is_null()) tau = bigint_from_string(j.at("tau").get<std::string>());
    if (!j.at("bp_class").is_null()) bp_class = bigint_from_string(j.at("bp_class").get<std::string>());
    if (!j.at("moduli_real_dim").is_null())
        moduli = bigint_from_string(j.at("moduli_real_dim").get<std::string>());
    return rebuild(split_exponents(j.at("a").get<std::string>()),
                   rational_from_string(j.at("fano_sum").get<std::string>()),
                   rational_from_string(j.at("upper_bound").get<std::string>()),
                   j.at("passes").get<bool>(), j.at("sphere").get<bool>(),
                   sphere_criterion_from_string(j.at("criterion").get<std::string>()), tau,
                   bp_class, arf_class_from_string(j.at("kervaire").get<std::string>()), moduli,
                   j.at("contact_excluded").get<bool>());
}

EnumerationRecord record_from_csv_row(const std::string& row) {
    std::vector<std::string> f = split_csv_row(row);
    if (f.size() != 13)
        throw std::invalid_argument("record_from_csv_row: expected 13 fields, got " +
                                    std::to_string(f.size()));
    std::optional<BigInt> tau, bp_class, moduli;
    if (!f[8].empty()) tau = bigint_from_string(f[8]);
    if (!f[9].empty()) bp_class = bigint_from_string(f[9]);
    if (!f[11].empty()) moduli = bigint_from_string(f[11]);
    return rebuild(split_exponents(f[0]), rational_from_string(f[3]),
                   rational_from_string(f[4]), f[5] == "true", f[6] == "true",
                   sphere_criterion_from_string(f[7]), tau, bp_class,
                   arf_class_from_string(f[10]), moduli, f[12] == "true");
}

void save_checkpoint(const std::string& path, const SearchCheckpoint& checkpoint) {
    ordered_json j;
    j["dimension"] = checkpoint.dimension;
    j["pair_mode"] = to_string(checkpoint.pair_mode);
    j["last_completed_prefix"] = checkpoint.last_completed_prefix;
    j["emitted_total"] = bigint_to_string(checkpoint.emitted_total);
    j["alternate_total"] = bigint_to_string(checkpoint.alternate_total);
    ordered_json counts = ordered_json::object();
    for (const auto& [label, count] : checkpoint.class_counts)
        counts[label] = bigint_to_string(count);
    j["class_counts"] = counts;
    j["contact_violations"] = bigint_to_string(checkpoint.contact_violations);
    j["tau_mod8_violations"] = bigint_to_string(checkpoint.tau_mod8_violations);

    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("save_checkpoint: cannot open " + tmp);
        out << j.dump(2) << '\n';
        if (!out) throw std::runtime_error("save_checkpoint: write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::optional<SearchCheckpoint> load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("load_checkpoint: malformed " + path + ": " + e.what());
    }
    SearchCheckpoint cp;
    cp.dimension = j.at("dimension").get<long>();
    cp.pair_mode = pair_mode_from_string(j.at("pair_mode").get<std::string>());
    cp.last_completed_prefix = j.at("last_completed_prefix").get<std::vector<std::int64_t>>();
    cp.emitted_total = bigint_from_string(j.at("emitted_total").get<std::string>());
    cp.alternate_total = bigint_from_string(j.at("alternate_total").get<std::string>());
    for (const auto& [label, count] : j.at("class_counts").items())
        cp.class_counts[label] = bigint_from_string(count.get<std::string>());
    cp.contact_violations = bigint_from_string(j.at("contact_violations").get<std::string>());
    cp.tau_mod8_violations = bigint_from_string(j.at("tau_mod8_violations").get<std::string>());
    return cp;
}

}
