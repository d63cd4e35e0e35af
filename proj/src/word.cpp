#include "collatz/word.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace collatz {

Word Word::normalized(std::vector<Block> raw) {
    Word w;
    for (const Block& b : raw) {
        if (b.exponent < 0) {
            throw std::invalid_argument("block with negative exponent");
        }
        if (b.exponent == 0) continue;
        if (!w.blocks_.empty() && w.blocks_.back().letter == b.letter) {
            w.blocks_.back().exponent += b.exponent;
        } else {
            w.blocks_.push_back(b);
        }
    }
    return w;
}

namespace {

Letter letter_for(char c, const MapPair& pair, std::size_t pos) {
    if (c == pair.first.label()) return Letter::First;
    if (c == pair.second.label()) return Letter::Second;
    throw std::invalid_argument("word parse error at position " + std::to_string(pos) +
                                ": unknown letter '" + std::string(1, c) + "'");
}

}  // namespace

Word Word::parse(std::string_view text, const MapPair& pair) {
    std::vector<Block> raw;
    std::size_t pos = 0;
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("word parse error at position " + std::to_string(pos) + ": " + why);
    };
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        const Letter letter = letter_for(text[pos], pair, pos);
        ++pos;
        if (pos >= text.size() || text[pos] != '^') fail("expected '^'");
        ++pos;
        const std::size_t digits_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits_begin) fail("expected exponent digits");
        std::int64_t exponent = 0;
        try {
            exponent = std::stoll(std::string(text.substr(digits_begin, pos - digits_begin)));
        } catch (const std::out_of_range&) {
            fail("exponent out of range");
        }
        if (exponent <= 0) fail("exponent must be positive");
        raw.push_back({letter, exponent});
    }
    return normalized(std::move(raw));
}

std::string Word::format(const MapPair& pair) const {
    std::string out;
    for (const Block& b : blocks_) {
        if (!out.empty()) out += ' ';
        out += (b.letter == Letter::First ? pair.first.label() : pair.second.label());
        out += '^';
        out += std::to_string(b.exponent);
    }
    return out;
}

std::int64_t Word::exponent_sum(Letter l) const {
    std::int64_t sum = 0;
    for (const Block& b : blocks_)
        if (b.letter == l) sum += b.exponent;
    return sum;
}

std::int64_t Word::block_count(Letter l) const {
    std::int64_t count = 0;
    for (const Block& b : blocks_)
        if (b.letter == l) ++count;
    return count;
}

Rational evaluate_stepwise(const Word& w, const MapPair& pair, const Rational& n) {
    Rational x = n;
    for (auto it = w.blocks().rbegin(); it != w.blocks().rend(); ++it) {
        const AffineMap& map = it->letter == Letter::First ? pair.first : pair.second;
        for (std::int64_t k = 0; k < it->exponent; ++k) x = map(x);
    }
    return x;
}

AffineMap fold_closed(const Word& w, const MapPair& pair) {
    AffineMap acc = AffineMap::identity();
    for (const Block& b : w.blocks()) {
        const AffineMap& map = b.letter == Letter::First ? pair.first : pair.second;
        acc = compose(acc, power_closed(map, b.exponent));
    }
    return acc;
}

Rational evaluate_closed(const Word& w, const MapPair& pair, const Rational& n) {
    return fold_closed(w, pair)(n);
}

std::int64_t IndexSums::between_at(std::int64_t i) const {
    if (i < 1 || i > static_cast<std::int64_t>(between.size())) {
        throw std::out_of_range("between(i) index out of range");
    }
    return between[static_cast<std::size_t>(i - 1)];
}

std::int64_t IndexSums::before_at(std::int64_t i) const {
    if (i < 1 || i > static_cast<std::int64_t>(before.size())) {
        throw std::out_of_range("before(i) index out of range");
    }
    return before[static_cast<std::size_t>(i - 1)];
}

IndexSums index_sums(const Word& w) {
    const std::int64_t l = w.block_count(Letter::Second);
    if (l < 1) {
        throw std::invalid_argument("index sums need at least one second-letter block");
    }
    IndexSums sums;
    sums.first_total = w.exponent_sum(Letter::First);
    sums.second_total = w.exponent_sum(Letter::Second);

    // Positions of second-letter blocks, left to right.
    std::vector<std::size_t> second_pos;
    for (std::size_t k = 0; k < w.blocks().size(); ++k)
        if (w.blocks()[k].letter == Letter::Second) second_pos.push_back(k);

    std::int64_t before_acc = 0;
    for (std::int64_t i = 1; i <= l - 1; ++i) {
        std::int64_t between = 0;
        for (std::size_t k = second_pos[i - 1] + 1; k < second_pos[l - 1]; ++k)
            if (w.blocks()[k].letter == Letter::First) between += w.blocks()[k].exponent;
        sums.between.push_back(between);
        sums.before.push_back(before_acc);
        before_acc += w.blocks()[second_pos[i - 1]].exponent;
    }
    return sums;
}

}  // namespace collatz
