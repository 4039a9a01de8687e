#include "bplink/search.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "bplink/errors.hpp"
#include "bplink/numtheory.hpp"
#include "bplink/serialize.hpp"

namespace bplink {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

EnumerationRecord classify_core(const ExponentSequence& seq, const BrieskornGraph& graph,
                                SphereVerdict verdict, const ClassifyOptions& options) {
    EnumerationRecord rec;
    rec.seq = seq;
    rec.cert = check_ke(seq, options.pair_mode);
    rec.sphere = verdict;
    rec.arf = arf_class(graph, seq);
    long dim = seq.link_dim();
    if (verdict.is_sphere && dim % 4 == 3) {
        SignatureResult sig;
        switch (options.signature_method) {
            case SignatureMethod::BruteLattice:
                sig = signature_brute(seq, options.brute_budget);
                break;
            case SignatureMethod::ZagierFloat:
                try {
                    sig = signature_zagier(seq, 64, options.zagier_n_cap);
                } catch (const PrecisionInsufficient&) {
                    sig = signature_zagier(seq, 113, options.zagier_n_cap);
                }
                break;
            default:
                sig = signature_dp(seq, options.dp_memory_budget);
                break;
        }
        rec.tau = sig.tau;
        if (*rec.tau % 8 == 0) {
            BpClass bp = bp_class_of(*rec.tau, dim);
            rec.bp_class = bp.oriented;
            rec.bp_unoriented = bp.unoriented;
        }
    }
    if (options.with_moduli) rec.moduli_real_dim = moduli_dimension(seq).real_dim;
    rec.contact_excluded = check_contact_exclusion(seq);
    return rec;
}

struct LeafVerdict {
    bool pass_diag = false;
    bool pass_off = false;
};

// Exact existence test on a canonical 64-bit leaf. Both pair modes are
// decided at once; nullopt means an intermediate left the unsigned range
// and the caller must redo the test with big integers.
std::optional<LeafVerdict> leaf_check_fast(const std::vector<i64>& a) {
    const std::size_t m = a.size();
    u64 c = 1;
    for (i64 v : a) {
        u64 uv = static_cast<u64>(v);
        u64 q = c / std::gcd(c, uv);
        if (__builtin_mul_overflow(q, uv, &c)) return std::nullopt;
    }
    u64 num = 0;
    for (i64 v : a) {
        if (__builtin_add_overflow(num, c / static_cast<u64>(v), &num)) return std::nullopt;
    }
    if (num <= c) return LeafVerdict{};
    // b_j = lcm over i != j of gcd(a_j, a_i); every intermediate divides a_j.
    u64 b1 = 1, b2 = 1;
    for (std::size_t j = 0; j < m; ++j) {
        u64 bj = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == j) continue;
            u64 g = std::gcd(static_cast<u64>(a[j]), static_cast<u64>(a[i]));
            bj = bj / std::gcd(bj, g) * g;
        }
        if (bj >= b1) {
            b2 = b1;
            b1 = bj;
        } else if (bj > b2) {
            b2 = bj;
        }
    }
    // Upper bound holds iff (num - c)(m - 2) d < (m - 1) c where 1/d is the
    // minimum admissible term. An overflowing left side only strengthens the
    // failure: the right side is below 2^70.
    u128 lhs = static_cast<u128>(num - c) * static_cast<u64>(m - 2);
    u128 rhs = static_cast<u128>(m - 1) * c;
    auto upper_holds = [&](u128 min_den) {
        u128 prod;
        if (__builtin_mul_overflow(lhs, min_den, &prod)) return false;
        return prod < rhs;
    };
    u64 amax = static_cast<u64>(a.back());
    u128 diag_den = std::max<u128>(static_cast<u128>(b1) * b1, amax);
    u128 off_den = std::max<u128>(static_cast<u128>(b1) * b2, amax);
    return LeafVerdict{upper_holds(diag_den), upper_holds(off_den)};
}

LeafVerdict leaf_check_big(const std::vector<i64>& a) {
    std::vector<BigInt> raw(a.begin(), a.end());
    ExponentSequence seq = derive(std::move(raw));
    return {check_ke(seq, PairMode::IncludeDiagonal).passes,
            check_ke(seq, PairMode::OffDiagonalOnly).passes};
}

struct Task {
    u64 seq_no = 0;
    std::vector<i64> a;
    LeafVerdict ke;
};

struct Result {
    bool marker = false;
    std::vector<i64> unit_prefix;  // marker results only
    bool emit = false;
    bool alternate = false;
    EnumerationRecord record;  // emit results only
};

struct Pipeline {
    std::mutex mu;
    std::condition_variable cv_task;   // workers: queue non-empty or producer done
    std::condition_variable cv_space;  // producer: queue below capacity
    std::condition_variable cv_done;   // writer: next result available
    std::deque<Task> queue;
    std::map<u64, Result> completed;
    std::size_t queue_cap = 64;
    bool producing = true;
    u64 produced = 0;  // valid once producing == false
    std::atomic<bool> stop{false};
    std::exception_ptr failure;

    void fail(std::exception_ptr e) {
        {
            std::lock_guard<std::mutex> lk(mu);
            if (!failure) failure = std::move(e);
            stop.store(true);
        }
        cv_task.notify_all();
        cv_space.notify_all();
        cv_done.notify_all();
    }
};

Result run_task(const Task& task, PairMode pair_mode, const ClassifyOptions& copts) {
    Result res;
    std::vector<BigInt> raw(task.a.begin(), task.a.end());
    ExponentSequence seq = derive(std::move(raw));
    BrieskornGraph graph = build_graph(seq);
    SphereVerdict verdict = is_homotopy_sphere(graph, seq);
    if (!verdict.is_sphere) return res;
    bool diag_first = pair_mode == PairMode::IncludeDiagonal;
    bool pass_req = diag_first ? task.ke.pass_diag : task.ke.pass_off;
    bool pass_alt = diag_first ? task.ke.pass_off : task.ke.pass_diag;
    res.alternate = pass_alt;
    if (!pass_req) return res;
    res.emit = true;
    res.record = classify_core(seq, graph, verdict, copts);
    return res;
}

void worker_loop(Pipeline& pl, PairMode pair_mode, const ClassifyOptions& copts) {
    for (;;) {
        Task task;
        {
            std::unique_lock<std::mutex> lk(pl.mu);
            pl.cv_task.wait(lk, [&] { return !pl.queue.empty() || !pl.producing; });
            if (pl.queue.empty()) return;
            task = std::move(pl.queue.front());
            pl.queue.pop_front();
        }
        pl.cv_space.notify_one();
        Result res;
        try {
            res = run_task(task, pair_mode, copts);
        } catch (...) {
            pl.fail(std::current_exception());
            res = Result{};
        }
        {
            std::lock_guard<std::mutex> lk(pl.mu);
            pl.completed.emplace(task.seq_no, std::move(res));
        }
        pl.cv_done.notify_one();
    }
}

// Depth-first generator over non-decreasing exponent prefixes. Search units
// are the (m-1)-entry prefixes, visited in lexicographic order; tasks and
// unit markers share one submission counter so the writer can restore order.
struct Producer {
    Pipeline& pl;
    std::size_t m;
    Rational k_m;  // (m - 1) / (m - 2)
    std::optional<i64> max_last;
    std::vector<i64> resume_prefix;  // empty: fresh run
    std::vector<i64> prefix;
    u64 seq_no = 0;

    void run() { dfs(0, Rational(0), resume_prefix.empty() ? 1 : 0); }

    static i64 strict_floor(const Rational& bound) {
        BigInt n = numerator(bound);
        BigInt d = denominator(bound);
        BigInt fl = n / d;
        if (n % d == 0) fl -= 1;
        BigInt cap = BigInt(std::numeric_limits<i64>::max()) - 1;
        if (fl > cap) fl = cap;
        if (fl < 0) return -1;
        return static_cast<i64>(fl);
    }

    // Largest admissible next entry, strict on both sides: with sum < 1 the
    // remaining entries must push the reciprocal sum above 1, with sum > 1
    // the smallest admissible bound term already caps the excess.
    i64 upper_limit(const Rational& sum, std::size_t remaining) const {
        if (sum < 1) return strict_floor(Rational(remaining) / (1 - sum));
        return strict_floor(k_m / (sum - 1));
    }

    // cmp: 0 while the prefix equals the resume prefix, 1 once above it.
    void dfs(std::size_t depth, const Rational& sum, int cmp) {
        if (pl.stop.load()) return;
        // A prefix with reciprocal sum exactly 1 has no completion that is
        // both admissible and a homotopy sphere.
        if (sum == 1) return;
        i64 lo = depth ? prefix[depth - 1] : 2;
        i64 hi = upper_limit(sum, m - depth);
        if (depth == m - 1) {
            run_unit(cmp, lo, hi);
            return;
        }
        for (i64 a = lo; a <= hi; ++a) {
            if (pl.stop.load()) return;
            // Entries never decrease, so a capped final entry caps them all.
            if (max_last && a > *max_last) break;
            int child_cmp = cmp;
            if (cmp == 0) {
                if (a < resume_prefix[depth]) continue;
                child_cmp = a == resume_prefix[depth] ? 0 : 1;
            }
            prefix.push_back(a);
            dfs(depth + 1, sum + Rational(1, a), child_cmp);
            prefix.pop_back();
        }
    }

    void run_unit(int cmp, i64 lo, i64 hi) {
        if (cmp == 0) return;  // the checkpointed unit itself: already emitted
        if (max_last && *max_last < hi) hi = *max_last;
        for (i64 last = lo; last <= hi; ++last) {
            if (pl.stop.load()) return;
            prefix.push_back(last);
            std::optional<LeafVerdict> fast = leaf_check_fast(prefix);
            LeafVerdict ke = fast ? *fast : leaf_check_big(prefix);
            if (ke.pass_diag || ke.pass_off) push_task(prefix, ke);
            prefix.pop_back();
        }
        if (!pl.stop.load()) push_marker();
    }

    void push_task(const std::vector<i64>& a, LeafVerdict ke) {
        std::unique_lock<std::mutex> lk(pl.mu);
        pl.cv_space.wait(lk, [&] { return pl.queue.size() < pl.queue_cap || pl.stop.load(); });
        if (pl.stop.load()) return;
        pl.queue.push_back(Task{seq_no++, a, ke});
        lk.unlock();
        pl.cv_task.notify_one();
    }

    void push_marker() {
        {
            std::lock_guard<std::mutex> lk(pl.mu);
            Result res;
            res.marker = true;
            res.unit_prefix = prefix;
            pl.completed.emplace(seq_no++, std::move(res));
        }
        pl.cv_done.notify_one();
    }
};

}  // namespace

EnumerationRecord classify(const ExponentSequence& seq, const ClassifyOptions& options) {
    if (seq.m() < 4)
        throw std::invalid_argument("classify: needs at least 4 exponents");
    BrieskornGraph graph = build_graph(seq);
    SphereVerdict verdict = is_homotopy_sphere(graph, seq);
    return classify_core(seq, graph, verdict, options);
}

BigInt sylvester(unsigned k) { return sylvester_number(k); }

std::vector<ExponentSequence> generate_family(FamilyKind kind, unsigned m) {
    if (m < 4) throw std::invalid_argument("generate_family: m must be at least 4");
    std::vector<BigInt> tail;  // c_1 .. c_{m-1}
    for (unsigned k = 1; k < m; ++k) tail.push_back(sylvester_number(k));
    std::vector<ExponentSequence> out;
    auto keep_if_passing = [&out](std::vector<BigInt> raw) {
        ExponentSequence seq = derive(std::move(raw));
        if (check_ke(seq).passes) out.push_back(std::move(seq));
    };
    switch (kind) {
        case FamilyKind::TailRange: {
            BigInt cm = sylvester_number(m);
            for (BigInt am = cm - tail.back() + 1; am < cm; ++am) {
                std::vector<BigInt> raw = tail;
                raw.push_back(am);
                keep_if_passing(std::move(raw));
            }
            break;
        }
        case FamilyKind::ModuliGiant: {
            std::vector<BigInt> raw = tail;
            raw.push_back((tail.back() - 2) * tail.back());
            keep_if_passing(std::move(raw));
            break;
        }
        case FamilyKind::KervaireEven: {
            std::vector<BigInt> base;
            for (unsigned k = 1; k + 1 < m; ++k) base.push_back(2 * sylvester_number(k));
            base.push_back(2);
            BigInt lo = 2 * sylvester_number(m - 2);
            BigInt hi = 2 * sylvester_number(m - 1) - 2;
            for (BigInt p = lo + 1; p < hi; ++p) {
                if (p % 2 == 0 || !is_probable_prime(p)) continue;
                std::vector<BigInt> raw = base;
                raw.push_back(p);
                keep_if_passing(std::move(raw));
            }
            break;
        }
    }
    return out;
}

std::string class_label(const EnumerationRecord& record) {
    if (record.seq.link_dim() % 4 == 3) {
        if (record.bp_class) return "bp:" + record.bp_class->str();
        return "unclassified";
    }
    switch (record.arf.cls) {
        case ArfClass::Standard: return "standard";
        case ArfClass::KervaireSphere: return "kervaire";
        default: return "unclassified";
    }
}

EnumerationSummary enumerate(long link_dim, const EnumerateOptions& options,
                             const std::function<void(const EnumerationRecord&)>& sink) {
    if (link_dim < 5 || link_dim % 2 == 0)
        throw std::invalid_argument("enumerate: link dimension must be odd and at least 5");
    const std::size_t m = static_cast<std::size_t>((link_dim + 3) / 2);

    EnumerationSummary summary;
    summary.link_dim = link_dim;
    summary.pair_mode = options.pair_mode;
    summary.partial = options.max_last.has_value();

    std::vector<i64> resume_prefix;
    if (!options.checkpoint_path.empty()) {
        if (std::optional<SearchCheckpoint> cp = load_checkpoint(options.checkpoint_path)) {
            if (cp->dimension != link_dim || cp->pair_mode != options.pair_mode)
                throw std::invalid_argument("enumerate: checkpoint does not match this run");
            if (cp->last_completed_prefix.size() != m - 1)
                throw std::invalid_argument("enumerate: checkpoint prefix has wrong length");
            resume_prefix = cp->last_completed_prefix;
            summary.total = cp->emitted_total;
            summary.alternate_total = cp->alternate_total;
            summary.class_counts = cp->class_counts;
            summary.contact_violations = cp->contact_violations;
            summary.tau_mod8_violations = cp->tau_mod8_violations;
        }
    }

    ClassifyOptions copts;
    copts.pair_mode = options.pair_mode;
    copts.with_moduli = options.with_moduli;

    Pipeline pl;
    const unsigned jobs = std::max(1u, options.jobs);
    pl.queue_cap = static_cast<std::size_t>(jobs) * 8 + 16;

    Producer producer{.pl = pl,
                      .m = m,
                      .k_m = Rational(BigInt(m) - 1, BigInt(m) - 2),
                      .max_last = options.max_last,
                      .resume_prefix = std::move(resume_prefix),
                      .prefix = {},
                      .seq_no = 0};

    std::vector<std::thread> threads;
    threads.emplace_back([&] {
        try {
            producer.run();
        } catch (...) {
            pl.fail(std::current_exception());
        }
        {
            std::lock_guard<std::mutex> lk(pl.mu);
            pl.producing = false;
            pl.produced = producer.seq_no;
        }
        pl.cv_task.notify_all();
        pl.cv_done.notify_all();
        pl.cv_space.notify_all();
    });
    for (unsigned i = 0; i < jobs; ++i)
        threads.emplace_back([&] { worker_loop(pl, options.pair_mode, copts); });

    // Writer: consume results in submission order. After an early halt the
    // rest of the stream is drained but dropped, so a resumed run emits a
    // record stream that concatenates identically with this one.
    u64 next = 0;
    u64 units_done = 0;
    bool halted = false;
    bool discard = false;
    for (;;) {
        Result res;
        {
            std::unique_lock<std::mutex> lk(pl.mu);
            pl.cv_done.wait(lk, [&] {
                return pl.completed.count(next) != 0 || (!pl.producing && next >= pl.produced);
            });
            auto it = pl.completed.find(next);
            if (it == pl.completed.end()) break;
            res = std::move(it->second);
            pl.completed.erase(it);
        }
        ++next;
        if (discard) continue;
        try {
            if (res.marker) {
                ++units_done;
                if (!options.checkpoint_path.empty()) {
                    SearchCheckpoint cp;
                    cp.dimension = link_dim;
                    cp.pair_mode = options.pair_mode;
                    cp.last_completed_prefix = res.unit_prefix;
                    cp.emitted_total = summary.total;
                    cp.alternate_total = summary.alternate_total;
                    cp.class_counts = summary.class_counts;
                    cp.contact_violations = summary.contact_violations;
                    cp.tau_mod8_violations = summary.tau_mod8_violations;
                    save_checkpoint(options.checkpoint_path, cp);
                }
                if (options.halt_after_units && units_done >= options.halt_after_units) {
                    halted = true;
                    discard = true;
                    {
                        std::lock_guard<std::mutex> lk(pl.mu);
                        pl.stop.store(true);
                    }
                    pl.cv_task.notify_all();
                    pl.cv_space.notify_all();
                }
                continue;
            }
            if (res.alternate) summary.alternate_total += 1;
            if (!res.emit) continue;
            summary.total += 1;
            summary.class_counts[class_label(res.record)] += 1;
            if (!res.record.contact_excluded) summary.contact_violations += 1;
            if (res.record.tau && *res.record.tau % 8 != 0) summary.tau_mod8_violations += 1;
            sink(res.record);
        } catch (...) {
            pl.fail(std::current_exception());
            discard = true;
        }
    }

    for (std::thread& t : threads) t.join();
    if (pl.failure) std::rethrow_exception(pl.failure);
    summary.partial = summary.partial || halted;
    return summary;
}

}
