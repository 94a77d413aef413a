#include "ptorsion/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "ptorsion/errors.hpp"

namespace ptorsion {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw ParseError("partition parts must be positive, got " + std::to_string(parts_[i]));
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw ParseError("partition parts must be weakly decreasing");
        }
        size_ += parts_[i];
    }
}

Partition Partition::from_multiplicities(const std::vector<int>& mult) {
    std::vector<int> parts;
    for (int i = static_cast<int>(mult.size()); i >= 1; --i) {
        if (mult[i - 1] < 0) {
            throw ParseError("negative multiplicity");
        }
        parts.insert(parts.end(), mult[i - 1], i);
    }
    return Partition(std::move(parts));
}

Partition Partition::from_conjugate(const std::vector<int>& conj_parts) {
    std::vector<int> trimmed(conj_parts);
    while (!trimmed.empty() && trimmed.back() == 0) {
        trimmed.pop_back();
    }
    return Partition(std::move(trimmed)).conjugate();
}

int Partition::part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

int Partition::multiplicity(int i) const noexcept {
    if (i <= 0) {
        return 0;
    }
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

int Partition::conj_part(int i) const noexcept {
    if (i <= 0) {
        return 0;
    }
    int count = 0;
    for (int part : parts_) {
        if (part < i) {
            break;
        }
        ++count;
    }
    return count;
}

Partition Partition::conjugate() const {
    std::vector<int> conj(largest());
    for (int i = 1; i <= largest(); ++i) {
        conj[i - 1] = conj_part(i);
    }
    return Partition(std::move(conj));
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int parse_int_token(const std::string& token, std::string_view what) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
        throw ParseError("invalid " + std::string(what) + " token '" + token + "'");
    }
    return value;
}

} // namespace

Partition parse_partition(std::string_view text) {
    const std::string body = trim(text);
    if (body.empty()) {
        return Partition();
    }
    if (body.find('^') != std::string::npos) {
        std::vector<int> mult;
        std::istringstream in(body);
        std::string clause;
        while (in >> clause) {
            const auto caret = clause.find('^');
            if (caret == std::string::npos || clause.find('^', caret + 1) != std::string::npos) {
                throw ParseError("malformed multiplicity clause '" + clause + "'");
            }
            const int part = parse_int_token(clause.substr(0, caret), "part");
            const int count = parse_int_token(clause.substr(caret + 1), "multiplicity");
            if (part <= 0) {
                throw ParseError("non-positive part in clause '" + clause + "'");
            }
            if (count < 0) {
                throw ParseError("negative multiplicity in clause '" + clause + "'");
            }
            if (static_cast<int>(mult.size()) < part) {
                mult.resize(part, 0);
            }
            mult[part - 1] += count;
        }
        return Partition::from_multiplicities(mult);
    }
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= body.size()) {
        const auto comma = body.find(',', start);
        const std::string token =
            trim(std::string_view(body).substr(start, comma == std::string::npos ? std::string::npos
                                                                                  : comma - start));
        const int part = parse_int_token(token, "part");
        if (part <= 0) {
            throw ParseError("non-positive part '" + token + "'");
        }
        if (!parts.empty() && part > parts.back()) {
            throw ParseError("parts must be weakly decreasing at token '" + token + "'");
        }
        parts.push_back(part);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string to_string(const Partition& lambda) {
    std::string out;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(lambda.parts()[i]);
    }
    return out;
}

std::string to_multiplicity_string(const Partition& lambda) {
    std::string out;
    for (int i = 1; i <= lambda.largest(); ++i) {
        const int m = lambda.multiplicity(i);
        if (m == 0) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(i) + "^" + std::to_string(m);
    }
    return out;
}

long nstat(const Partition& lambda) {
    long by_rows = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        by_rows += static_cast<long>(i - 1) * lambda.part(i);
    }
    long by_columns = 0;
    for (int i = 1; i <= lambda.largest(); ++i) {
        const long c = lambda.conj_part(i);
        by_columns += c * (c - 1) / 2;
    }
    if (by_rows != by_columns) {
        throw std::logic_error("n(lambda) row and column formulas disagree");
    }
    return by_rows;
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) {
        return false;
    }
    for (int i = 1; i <= mu.length(); ++i) {
        if (mu.part(i) > lambda.part(i)) {
            return false;
        }
    }
#ifndef NDEBUG
    for (int i = 1; i <= mu.largest(); ++i) {
        if (mu.conj_part(i) > lambda.conj_part(i)) {
            throw std::logic_error("containment disagrees on conjugates");
        }
    }
#endif
    return true;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& prefix,
                    const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition(prefix));
        return;
    }
    if (static_cast<int>(prefix.size()) == max_length) {
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, max_length, prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

void for_each_partition(int n, std::optional<int> max_part, std::optional<int> max_length,
                        const std::function<void(const Partition&)>& visit) {
    if (n < 0) {
        throw std::invalid_argument("partitions_of requires n >= 0");
    }
    std::vector<int> prefix;
    partitions_rec(n, max_part.value_or(n), max_length.value_or(n), prefix, visit);
}

std::vector<Partition> partitions_of(int n, std::optional<int> max_part,
                                     std::optional<int> max_length) {
    std::vector<Partition> out;
    for_each_partition(n, max_part, max_length, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    // Depth-first over rows: mu_i ranges over [0, min(lambda_i, mu_{i-1})].
    std::vector<Partition> out;
    std::vector<int> prefix;
    std::function<void(int)> rec = [&](int row) {
        const int bound = std::min(lambda.part(row), prefix.empty() ? lambda.part(row) : prefix.back());
        out.emplace_back(prefix);
        for (int v = 1; v <= bound; ++v) {
            prefix.push_back(v);
            rec(row + 1);
            prefix.pop_back();
        }
    };
    rec(1);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a > b;
    });
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    if (rows < 0 || cols < 0) throw DimensionError("box dimensions must be nonnegative");
    if (rows == 0 || cols == 0) return {Partition()};
    std::vector<int> box(rows, cols);
    return subpartitions(Partition(box));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace ptorsion
