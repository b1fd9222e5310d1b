#include "phcurv/complex.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <string>

#include "phcurv/parallel.hpp"

namespace phcurv {

BudgetExceeded::BudgetExceeded(std::uint64_t budget)
    : std::runtime_error("simplex budget of " + std::to_string(budget) +
                         " exceeded; raise it with PHCURV_BUDGET or --budget, or cap the dimension")
    , budget_(budget)
{
}

std::uint64_t budget_from_environment()
{
    const char* raw = std::getenv("PHCURV_BUDGET");
    if (raw == nullptr || *raw == '\0')
        return kDefaultSimplexBudget;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0)
        throw std::invalid_argument(std::string("PHCURV_BUDGET must be a positive integer, got '") + raw + "'");
    return value;
}

namespace {

// Budgets at or beyond this are treated as unlimited, which also keeps the
// shared counter far from overflow.
constexpr std::uint64_t kBudgetCeiling = std::uint64_t{1} << 62;

/// Graph on a small vertex list, rows as local bitsets.
struct LocalGraph {
    std::size_t size = 0;
    std::size_t words = 0;
    std::vector<bits::Word> rows;

    std::span<const bits::Word> row(std::size_t i) const { return {rows.data() + i * words, words}; }

    void build(const Graph& g, std::span<const Vertex> vertices)
    {
        size = vertices.size();
        words = bits::words_for(size);
        rows.assign(size * words, 0);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = i + 1; j < size; ++j) {
                if (g.adjacent(vertices[i], vertices[j])) {
                    bits::set(std::span<bits::Word>(rows.data() + i * words, words), j);
                    bits::set(std::span<bits::Word>(rows.data() + j * words, words), i);
                }
            }
        }
    }
};

/// Per-depth scratch: candidate set and branch set for each recursion level.
struct Scratch {
    std::size_t words = 0;
    std::vector<bits::Word> cand;
    std::vector<bits::Word> branch;

    void reserve(std::size_t depth, std::size_t w)
    {
        words = w;
        if (cand.size() < depth * w) {
            cand.resize(depth * w);
            branch.resize(depth * w);
        }
    }
    std::span<bits::Word> p(std::size_t level) { return {cand.data() + level * words, words}; }
    std::span<bits::Word> b(std::size_t level) { return {branch.data() + level * words, words}; }
};

std::size_t choose_pivot(const LocalGraph& lg, std::span<const bits::Word> p)
{
    std::size_t best = 0;
    std::size_t best_count = 0;
    bool first = true;
    bits::for_each(p, [&](std::size_t u) {
        const std::size_t c = bits::count_and(p, lg.row(u));
        if (first || c > best_count) {
            best = u;
            best_count = c;
            first = false;
        }
    });
    return best;
}

void fill_all(std::span<bits::Word> s, std::size_t size)
{
    std::fill(s.begin(), s.end(), 0);
    for (std::size_t i = 0; i < size; ++i)
        bits::set(s, i);
}

/// Binomial coefficients as big integers, grown on demand.
class Binomials {
public:
    const BigInt& operator()(std::size_t n, std::size_t k)
    {
        while (rows_.size() <= n) {
            const std::size_t m = rows_.size();
            std::vector<BigInt> row(m + 1, BigInt(1));
            for (std::size_t j = 1; j < m; ++j)
                row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    std::vector<std::vector<BigInt>> rows_;
};

/// Counts cliques of a local graph by pivoting. A leaf with `hold` forced
/// vertices and `pivots` free pivot vertices stands for C(pivots, j) cliques
/// of size hold + j, for each j.
class PivotCounter {
public:
    PivotCounter(std::size_t cap_size, std::uint64_t budget, std::atomic<std::uint64_t>& total, std::atomic<bool>& stop)
        : cap_size_(cap_size)
        , budget_(budget)
        , total_(total)
        , stop_(stop)
    {
    }

    void count_rooted(const LocalGraph& lg)
    {
        scratch_.reserve(lg.size + 2, std::max<std::size_t>(lg.words, 1));
        fill_all(scratch_.p(0), lg.size);
        recurse(lg, 0, 1, 0);
    }

    std::vector<BigInt>& counts() { return counts_; }
    bool truncated() const { return truncated_; }

private:
    void record(std::size_t hold, std::size_t pivots)
    {
        BigInt added = 0;
        for (std::size_t j = 0; j <= pivots; ++j) {
            const std::size_t size = hold + j;
            if (size > cap_size_) {
                truncated_ = true;
                break;
            }
            if (counts_.size() < size)
                counts_.resize(size);
            const BigInt& c = binom_(pivots, j);
            counts_[size - 1] += c;
            added += c;
        }
        if (budget_ >= kBudgetCeiling)
            return;
        if (added > budget_)
            throw BudgetExceeded(budget_);
        const auto inc = added.convert_to<std::uint64_t>();
        if (total_.fetch_add(inc, std::memory_order_relaxed) + inc > budget_) {
            stop_.store(true, std::memory_order_relaxed);
            throw BudgetExceeded(budget_);
        }
    }

    void recurse(const LocalGraph& lg, std::size_t level, std::size_t hold, std::size_t pivots)
    {
        if (stop_.load(std::memory_order_relaxed))
            throw BudgetExceeded(budget_);
        if (hold > cap_size_) {
            truncated_ = true;
            return;
        }
        auto p = scratch_.p(level);
        if (!bits::any(p)) {
            record(hold, pivots);
            return;
        }
        const std::size_t pivot = choose_pivot(lg, p);
        auto branch = scratch_.b(level);
        bits::assign_and_not(branch, p, lg.row(pivot));
        // Pivot child first; every other branch vertex is non-adjacent to it.
        bits::assign_and(scratch_.p(level + 1), p, lg.row(pivot));
        recurse(lg, level + 1, hold, pivots + 1);
        bits::reset(p, pivot);
        bits::reset(branch, pivot);
        bits::for_each(std::span<const bits::Word>(branch), [&](std::size_t w) {
            bits::assign_and(scratch_.p(level + 1), scratch_.p(level), lg.row(w));
            recurse(lg, level + 1, hold + 1, pivots);
            bits::reset(scratch_.p(level), w);
        });
    }

    std::size_t cap_size_;
    std::uint64_t budget_;
    std::atomic<std::uint64_t>& total_;
    std::atomic<bool>& stop_;
    Scratch scratch_;
    Binomials binom_;
    std::vector<BigInt> counts_;
    bool truncated_ = false;
};

/// Signed clique sum over a local graph: returns the reduced Euler
/// characteristic (empty clique included with weight -1). Pivot subtrees
/// cancel exactly and are skipped.
class EulerKernel {
public:
    std::int64_t reduced(const LocalGraph& lg)
    {
        scratch_.reserve(lg.size + 2, std::max<std::size_t>(lg.words, 1));
        fill_all(scratch_.p(0), lg.size);
        return recurse(lg, 0, 0);
    }

private:
    std::int64_t recurse(const LocalGraph& lg, std::size_t level, std::size_t hold)
    {
        auto p = scratch_.p(level);
        if (!bits::any(p))
            return (hold % 2 == 1) ? 1 : -1;
        const std::size_t pivot = choose_pivot(lg, p);
        auto branch = scratch_.b(level);
        bits::assign_and_not(branch, p, lg.row(pivot));
        bits::reset(p, pivot);
        bits::reset(branch, pivot);
        std::int64_t sum = 0;
        bits::for_each(std::span<const bits::Word>(branch), [&](std::size_t w) {
            bits::assign_and(scratch_.p(level + 1), scratch_.p(level), lg.row(w));
            sum += recurse(lg, level + 1, hold + 1);
            bits::reset(scratch_.p(level), w);
        });
        return sum;
    }

    Scratch scratch_;
};

std::vector<Vertex> forward_neighbors(const Graph& h, Vertex v)
{
    const auto& nb = h.neighbors(v);
    return {std::upper_bound(nb.begin(), nb.end(), v), nb.end()};
}

std::size_t cap_size_of(const ComplexOptions& opts)
{
    if (!opts.max_dim)
        return std::numeric_limits<std::size_t>::max();
    return *opts.max_dim + 1;
}

/// Sorts packed (k+1)-tuples lexicographically.
void sort_packed(std::vector<Vertex>& packed, std::size_t width)
{
    const std::size_t count = packed.size() / width;
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(packed.begin() + static_cast<std::ptrdiff_t>(a * width),
                                            packed.begin() + static_cast<std::ptrdiff_t>((a + 1) * width),
                                            packed.begin() + static_cast<std::ptrdiff_t>(b * width),
                                            packed.begin() + static_cast<std::ptrdiff_t>((b + 1) * width));
    });
    std::vector<Vertex> out;
    out.reserve(packed.size());
    for (std::size_t i : idx)
        out.insert(out.end(), packed.begin() + static_cast<std::ptrdiff_t>(i * width),
                   packed.begin() + static_cast<std::ptrdiff_t>((i + 1) * width));
    packed = std::move(out);
}

/// Lists cliques of the relabelled graph whose lowest vertex is fixed,
/// extending only through higher ids.
class CliqueLister {
public:
    CliqueLister(const std::vector<Vertex>& order, std::size_t cap_size, std::uint64_t budget)
        : order_(order)
        , cap_size_(cap_size)
        , budget_(budget)
    {
    }

    void list_rooted(const LocalGraph& lg, Vertex root, std::span<const Vertex> locals)
    {
        locals_ = locals;
        stack_.assign(1, root);
        scratch_.reserve(lg.size + 2, std::max<std::size_t>(lg.words, 1));
        fill_all(scratch_.p(0), lg.size);
        emit();
        recurse(lg, 0);
    }

    std::vector<std::vector<Vertex>>& packed() { return packed_; }
    bool truncated() const { return truncated_; }

private:
    void emit()
    {
        if (++stored_ > budget_ && budget_ < kBudgetCeiling)
            throw BudgetExceeded(budget_);
        const std::size_t k = stack_.size() - 1;
        if (packed_.size() <= k)
            packed_.resize(k + 1);
        tmp_.clear();
        for (Vertex v : stack_)
            tmp_.push_back(order_[v]);
        std::sort(tmp_.begin(), tmp_.end());
        packed_[k].insert(packed_[k].end(), tmp_.begin(), tmp_.end());
    }

    void recurse(const LocalGraph& lg, std::size_t level)
    {
        auto p = scratch_.p(level);
        if (!bits::any(p))
            return;
        if (stack_.size() >= cap_size_) {
            truncated_ = true;
            return;
        }
        bits::for_each(std::span<const bits::Word>(p), [&](std::size_t w) {
            bits::reset(scratch_.p(level), w);
            bits::assign_and(scratch_.p(level + 1), scratch_.p(level), lg.row(w));
            stack_.push_back(locals_[w]);
            emit();
            recurse(lg, level + 1);
            stack_.pop_back();
        });
    }

    const std::vector<Vertex>& order_;
    std::size_t cap_size_;
    std::uint64_t budget_;
    std::uint64_t stored_ = 0;
    std::span<const Vertex> locals_;
    std::vector<Vertex> stack_;
    std::vector<Vertex> tmp_;
    Scratch scratch_;
    std::vector<std::vector<Vertex>> packed_;
    bool truncated_ = false;
};

} // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::vector<Vertex>> packed, bool truncated)
    : packed_(std::move(packed))
    , truncated_(truncated)
{
    while (!packed_.empty() && packed_.back().empty())
        packed_.pop_back();
}

bool SimplicialComplex::contains(std::span<const Vertex> vertices) const
{
    if (vertices.empty())
        return false;
    const std::size_t k = vertices.size() - 1;
    if (k >= packed_.size())
        return false;
    std::size_t lo = 0;
    std::size_t hi = count(k);
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const auto s = simplex(k, mid);
        if (std::lexicographical_compare(s.begin(), s.end(), vertices.begin(), vertices.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < count(k) && std::ranges::equal(simplex(k, lo), vertices);
}

FVector SimplicialComplex::f_vector() const
{
    FVector f;
    f.truncated = truncated_;
    for (std::size_t k = 0; k < packed_.size(); ++k)
        f.counts.emplace_back(count(k));
    return f;
}

SimplicialComplex whitney_complex(const Graph& g, const ComplexOptions& opts)
{
    const std::size_t cap = cap_size_of(opts);
    if (cap == 0)
        return SimplicialComplex({}, g.vertex_count() > 0);
    const std::uint64_t budget = opts.budget;
    auto [order, degeneracy] = degeneracy_order(g);
    const Graph h = relabel(g, order);
    CliqueLister lister(order, cap, budget);
    LocalGraph lg;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        const auto fwd = forward_neighbors(h, v);
        lg.build(h, fwd);
        lister.list_rooted(lg, v, fwd);
    }
    auto& packed = lister.packed();
    for (std::size_t k = 0; k < packed.size(); ++k)
        sort_packed(packed[k], k + 1);
    return SimplicialComplex(std::move(packed), lister.truncated());
}

FVector count_simplices(const Graph& g, const ComplexOptions& opts)
{
    FVector f;
    const std::size_t cap = cap_size_of(opts);
    if (cap == 0) {
        f.truncated = g.vertex_count() > 0;
        return f;
    }
    const std::uint64_t budget = opts.budget;
    auto [order, degeneracy] = degeneracy_order(g);
    const Graph h = relabel(g, order);
    const std::size_t n = h.vertex_count();

    std::atomic<std::uint64_t> total{0};
    std::atomic<bool> stop{false};
    const unsigned workers = resolve_threads(opts.threads);
    std::vector<std::vector<BigInt>> partial(workers);
    std::vector<char> truncated(workers, 0);
    // Interleave vertices across workers: late vertices in a degeneracy order
    // have the largest forward neighbourhoods.
    parallel_blocks(workers, workers, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t w = begin; w < end; ++w) {
            PivotCounter counter(cap, budget, total, stop);
            LocalGraph lg;
            for (std::size_t v = w; v < n; v += workers) {
                lg.build(h, forward_neighbors(h, static_cast<Vertex>(v)));
                counter.count_rooted(lg);
            }
            partial[w] = std::move(counter.counts());
            truncated[w] = counter.truncated() ? 1 : 0;
        }
    });
    for (unsigned w = 0; w < workers; ++w) {
        if (partial[w].size() > f.counts.size())
            f.counts.resize(partial[w].size());
        for (std::size_t k = 0; k < partial[w].size(); ++k)
            f.counts[k] += partial[w][k];
        f.truncated = f.truncated || truncated[w] != 0;
    }
    return f;
}

BigInt euler_characteristic(const FVector& f)
{
    if (f.truncated)
        throw std::domain_error("Euler characteristic of a dimension-truncated complex is undefined");
    BigInt chi = 0;
    for (std::size_t k = 0; k < f.counts.size(); ++k)
        chi += (k % 2 == 0) ? f.counts[k] : BigInt(-f.counts[k]);
    return chi;
}

BigInt euler_characteristic(const SimplicialComplex& c) { return euler_characteristic(c.f_vector()); }

std::int64_t induced_euler_characteristic(const Graph& g, std::span<const bits::Word> subset)
{
    thread_local LocalGraph lg;
    thread_local EulerKernel kernel;
    thread_local std::vector<Vertex> members;
    members.clear();
    bits::for_each(subset, [&](std::size_t v) { members.push_back(static_cast<Vertex>(v)); });
    lg.build(g, members);
    return 1 + kernel.reduced(lg);
}

Subgraph unit_sphere(const Graph& g, Vertex v)
{
    check_vertex(g, v);
    return induced_subgraph(g, g.neighbors(v));
}

Polynomial f_function(const FVector& f)
{
    std::vector<Rational> coeffs;
    coeffs.reserve(f.counts.size() + 1);
    coeffs.emplace_back(1);
    for (const auto& c : f.counts)
        coeffs.emplace_back(c);
    return Polynomial(std::move(coeffs));
}

} // namespace phcurv
