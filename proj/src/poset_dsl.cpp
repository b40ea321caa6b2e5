#include <charconv>

#include "chromsym/error.hpp"
#include "chromsym/poset.hpp"

namespace chromsym {

PosetSpec PosetSpec::chain(int n) { return {Kind::Chain, {n}, nullptr}; }
PosetSpec PosetSpec::product(std::vector<int> dims) { return {Kind::Product, std::move(dims), nullptr}; }
PosetSpec PosetSpec::boolean(int r) { return {Kind::Boolean, {r}, nullptr}; }
PosetSpec PosetSpec::b3(int n) { return {Kind::B3, {n}, nullptr}; }
PosetSpec PosetSpec::ordinal_sum(int p, PosetSpec inner, int q) {
    return {Kind::OrdinalSum, {p, q}, std::make_shared<const PosetSpec>(std::move(inner))};
}

std::string PosetSpec::to_dsl() const {
    switch (kind) {
        case Kind::Chain: return "chain:" + std::to_string(params.at(0));
        case Kind::Boolean: return "bool:" + std::to_string(params.at(0));
        case Kind::B3: return "b3:" + std::to_string(params.at(0));
        case Kind::Product: {
            std::string out = "prod:";
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i) out += 'x';
                out += std::to_string(params[i]);
            }
            return out;
        }
        case Kind::OrdinalSum:
            return "sum:" + std::to_string(params.at(0)) + "+" + inner->to_dsl() + "+" +
                   std::to_string(params.at(1));
    }
    return {};
}

std::optional<std::pair<int, int>> PosetSpec::two_chain_dims() const {
    if (kind != Kind::Product || params.size() != 2) return std::nullopt;
    const int a = params[0];
    const int b = params[1];
    return a >= b ? std::pair{a, b} : std::pair{b, a};
}

namespace {

class DslParser {
public:
    explicit DslParser(std::string_view text) : text_(text) {}

    PosetSpec parse_all() {
        PosetSpec spec = parse_spec();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
        return spec;
    }

private:
    PosetSpec parse_spec() {
        const std::size_t start = pos_;
        std::size_t colon = text_.find(':', pos_);
        if (colon == std::string_view::npos) throw ParseError(pos_, "expected '<kind>:'");
        std::string_view kind = text_.substr(pos_, colon - pos_);
        pos_ = colon + 1;
        if (kind == "chain") return PosetSpec::chain(positive());
        if (kind == "bool") return PosetSpec::boolean(positive());
        if (kind == "b3") return PosetSpec::b3(positive());
        if (kind == "prod") {
            std::vector<int> dims = {positive()};
            while (pos_ < text_.size() && text_[pos_] == 'x') {
                ++pos_;
                dims.push_back(positive());
            }
            return PosetSpec::product(std::move(dims));
        }
        if (kind == "sum") {
            const int p = number();
            expect('+');
            PosetSpec inner = parse_spec();
            expect('+');
            const int q = number();
            return PosetSpec::ordinal_sum(p, std::move(inner), q);
        }
        throw ParseError(start, "unknown poset kind '" + std::string(kind) + "'");
    }

    int number() {
        int value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first || *first == '-' || *first == '+')
            throw ParseError(pos_, "expected a nonnegative integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    int positive() {
        const std::size_t at = pos_;
        const int value = number();
        if (value < 1) throw ParseError(at, "expected a positive integer");
        return value;
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

PosetSpec PosetSpec::parse(std::string_view text) { return DslParser(text).parse_all(); }

}  // namespace chromsym
