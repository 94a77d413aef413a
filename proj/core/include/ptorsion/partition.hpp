#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ptorsion {

/// An integer partition stored as its weakly decreasing list of positive parts.
///
/// Parts are 1-indexed in accessors, matching the usual lambda_1 >= lambda_2 >= ...
/// convention; reading past the length yields 0.
class Partition {
public:
    Partition() = default;

    /// Throws ParseError unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    /// Builds 1^{m_1} 2^{m_2} ... from multiplicities (index 0 holds m_1).
    static Partition from_multiplicities(const std::vector<int>& mult);

    /// Builds the partition whose conjugate has the given (decreasing) parts.
    static Partition from_conjugate(const std::vector<int>& conj_parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// lambda_i, 1-based; 0 when i exceeds the length.
    int part(int i) const noexcept;

    /// m_i = #{j : lambda_j = i} for i >= 1.
    int multiplicity(int i) const noexcept;

    /// lambda'_i = #{j : lambda_j >= i}, 1-based; 0 past lambda_1.
    int conj_part(int i) const noexcept;

    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Accepts "3,1,1" or "1^2 3^1"; blank text is the empty partition.
Partition parse_partition(std::string_view text);

/// Canonical comma form, e.g. "3,1,1"; the empty partition renders as "".
std::string to_string(const Partition& lambda);

/// Multiplicity form, e.g. "1^2 3^1".
std::string to_multiplicity_string(const Partition& lambda);

/// n(lambda) = sum (i-1) lambda_i. Also evaluates sum C(lambda'_i, 2) and
/// throws std::logic_error if the two disagree.
long nstat(const Partition& lambda);

/// mu is contained in lambda (mu_i <= lambda_i for all i).
bool contains(const Partition& lambda, const Partition& mu);

/// Visits each partition of n with parts <= max_part and length <= max_length,
/// in reverse-lexicographic order of parts.
void for_each_partition(int n, std::optional<int> max_part, std::optional<int> max_length,
                        const std::function<void(const Partition&)>& visit);

std::vector<Partition> partitions_of(int n, std::optional<int> max_part = std::nullopt,
                                     std::optional<int> max_length = std::nullopt);

/// Every mu contained in lambda, once each, ordered by size then reverse-lex.
std::vector<Partition> subpartitions(const Partition& lambda);

/// Partitions fitting in a rows x cols box (lambda_1 <= cols, length <= rows).
std::vector<Partition> partitions_in_box(int rows, int cols);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

} // namespace ptorsion
