#include "chromsym/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "chromsym/error.hpp"

namespace chromsym {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownElement: return "UnknownElement";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::FastPathInapplicable: return "FastPathInapplicable";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::InternalInvariantBroken: return "InternalInvariantBroken";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "Error";
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw Error(ErrorKind::InvalidSpec, "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error(ErrorKind::InvalidSpec, "partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::sorted(std::vector<int> parts) {
    std::erase_if(parts, [](int p) { return p == 0; });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    if (text.empty()) return {};
    while (true) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + pos)
            throw ParseError(pos, "expected a decimal part");
        if (value < 1) throw ParseError(pos, "partition parts must be positive");
        if (!parts.empty() && value > parts.back())
            throw ParseError(pos, "partition parts must be weakly decreasing");
        parts.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError(pos, "expected ','");
        ++pos;
    }
    return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int part : p) h = (h ^ static_cast<std::size_t>(part)) * 0x100000001b3ULL;
    return h;
}

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw Error(ErrorKind::InvalidSpec, "weak composition entries must be >= 0");
        total_ += e;
    }
}

int MultiplicityProfile::size() const noexcept {
    int total = 0;
    for (auto [part, count] : counts) total += part * count;
    return total;
}

int MultiplicityProfile::multiplicity(int part) const noexcept {
    for (auto [p, count] : counts)
        if (p == part) return count;
    return 0;
}

Partition MultiplicityProfile::to_partition() const {
    std::vector<int> parts;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it)
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    return Partition(std::move(parts));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw Error(ErrorKind::SizeMismatch, "dominance compares partitions of the same integer");
    const std::size_t len = std::max(mu.length(), lambda.length());
    int mu_sum = 0;
    int lambda_sum = 0;
    for (std::size_t i = 0; i < len; ++i) {
        mu_sum += mu[i];
        lambda_sum += lambda[i];
        if (mu_sum > lambda_sum) return false;
    }
    return true;
}

MultiplicityProfile multiplicity_profile(const Partition& lambda) {
    MultiplicityProfile profile;
    for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it) {
        if (!profile.counts.empty() && profile.counts.back().first == *it)
            ++profile.counts.back().second;
        else
            profile.counts.emplace_back(*it, 1);
    }
    return profile;
}

Partition suffix(const Partition& lambda, int k) {
    if (k < 1) throw Error(ErrorKind::PreconditionViolated, "suffix index is 1-based");
    const auto start = static_cast<std::size_t>(k - 1);
    if (start >= lambda.length()) return {};
    return Partition(std::vector<int>(lambda.parts().begin() + static_cast<std::ptrdiff_t>(start),
                                      lambda.parts().end()));
}

namespace {

void compositions_rec(std::vector<int>& buf, std::size_t index, int remaining,
                      const std::function<void(const WeakComposition&)>& visit) {
    if (index + 1 == buf.size()) {
        buf[index] = remaining;
        visit(WeakComposition(buf));
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        buf[index] = v;
        compositions_rec(buf, index + 1, remaining - v, visit);
    }
    buf[index] = 0;
}

void partitions_rec(std::vector<int>& buf, int remaining, int max_part, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(buf);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        buf.push_back(p);
        partitions_rec(buf, remaining - p, p, out);
        buf.pop_back();
    }
}

}  // namespace

void for_each_weak_composition(int total, int length,
                               const std::function<void(const WeakComposition&)>& visit) {
    if (length < 1) throw Error(ErrorKind::PreconditionViolated, "composition length must be >= 1");
    if (total < 0) return;
    std::vector<int> buf(static_cast<std::size_t>(length), 0);
    compositions_rec(buf, 0, total, visit);
}

std::vector<WeakComposition> weak_compositions(int total, int length) {
    std::vector<WeakComposition> out;
    for_each_weak_composition(total, length, [&](const WeakComposition& c) { out.push_back(c); });
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> buf;
    partitions_rec(buf, n, n, out);
    return out;
}

BigInt factorial(int n) {
    if (n < 0) throw Error(ErrorKind::PreconditionViolated, "factorial of a negative number");
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

BigInt multinomial(int n, std::span<const int> parts) {
    int sum = 0;
    for (int p : parts) {
        if (p < 0) throw Error(ErrorKind::PreconditionViolated, "multinomial parts must be >= 0");
        sum += p;
    }
    if (sum != n) throw Error(ErrorKind::SizeMismatch, "multinomial parts must sum to n");
    // Product of binomials keeps every intermediate value integral.
    BigInt result = 1;
    int running = 0;
    for (int p : parts) {
        running += p;
        result *= binomial(running, p);
    }
    return result;
}

BigInt multinomial(int n, const WeakComposition& parts) {
    return multinomial(n, std::span<const int>(parts.entries()));
}

}  // namespace chromsym
