#ifndef WICKLAB_MULTI_INDEX_HPP
#define WICKLAB_MULTI_INDEX_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wicklab {

/// Exponent vector indexing one product Hermite basis element
/// He_alpha(x) = prod_i He_{alpha_i}(x_i).
class MultiIndex {
  public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> degrees) : degrees_(std::move(degrees)) {
        for (int d : degrees_)
            if (d < 0) throw std::invalid_argument("MultiIndex: negative degree");
    }

    MultiIndex(std::initializer_list<int> degrees)
        : MultiIndex(std::vector<int>(degrees)) {}

    static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }

    int dim() const { return static_cast<int>(degrees_.size()); }

    int operator[](int i) const { return degrees_[static_cast<std::size_t>(i)]; }

    const std::vector<int>& degrees() const { return degrees_; }

    int total_degree() const {
        return std::accumulate(degrees_.begin(), degrees_.end(), 0);
    }

    /// alpha! = prod_i alpha_i!, as a double (degrees stay small enough).
    double factorial() const {
        double f = 1.0;
        for (int d : degrees_) f *= std::tgamma(static_cast<double>(d) + 1.0);
        return f;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        if (o.dim() != dim()) throw std::invalid_argument("MultiIndex: dim mismatch");
        std::vector<int> s(degrees_);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += o.degrees_[i];
        return MultiIndex(std::move(s));
    }

    auto operator<=>(const MultiIndex&) const = default;

    /// All indices of length `dim` with total degree exactly `k`,
    /// in lexicographic order.
    static std::vector<MultiIndex> with_total_degree(int dim, int k) {
        std::vector<MultiIndex> out;
        std::vector<int> cur(static_cast<std::size_t>(dim), 0);
        enumerate(cur, 0, k, out);
        return out;
    }

    /// All indices of length `dim` with total degree <= N.
    static std::vector<MultiIndex> up_to_degree(int dim, int max_degree) {
        std::vector<MultiIndex> out;
        for (int k = 0; k <= max_degree; ++k) {
            auto layer = with_total_degree(dim, k);
            out.insert(out.end(), layer.begin(), layer.end());
        }
        return out;
    }

  private:
    static void enumerate(std::vector<int>& cur, std::size_t pos, int remaining,
                          std::vector<MultiIndex>& out) {
        if (pos + 1 == cur.size()) {
            cur[pos] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            cur[pos] = d;
            enumerate(cur, pos + 1, remaining - d, out);
        }
        cur[pos] = 0;
    }

    std::vector<int> degrees_;
};

} // namespace wicklab

#endif
