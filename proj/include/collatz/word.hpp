#pragma once

/**
 * @file word.hpp
 * @brief Two-letter composition words in maximal-block form.
 *
 * A word is a sequence of blocks letter^exponent written in composition
 * order: the LEFTMOST block is applied LAST. "E^3 O^2 E^1" applied to x is
 * E(E(E(O(O(E(x)))))). Adjacent blocks always carry different letters and
 * every exponent is positive; the empty word is the identity.
 *
 * Letters are abstract (First/Second) and bind to a concrete MapPair only
 * at parse/format/evaluation time. The default pair is (E, O) with First=E.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/affine_map.hpp"
#include "collatz/rational.hpp"

namespace collatz {

enum class Letter { First, Second };

constexpr Letter other(Letter l) { return l == Letter::First ? Letter::Second : Letter::First; }

struct Block {
    Letter letter;
    std::int64_t exponent;

    bool operator==(const Block&) const = default;
};

class Word {
public:
    /// The identity word.
    Word() = default;

    /// Builds a word from a raw block sequence: zero-exponent blocks are
    /// dropped, adjacent same-letter blocks merged. Negative exponents
    /// throw std::invalid_argument.
    static Word normalized(std::vector<Block> raw);

    /// Parses "E^3 O^2 E^1" against the pair's labels. Blocks appear in the
    /// result exactly as written (composition order), then normalized.
    /// Empty/blank text is the identity word. Syntax errors report the
    /// offending position; exponents must be positive.
    static Word parse(std::string_view text, const MapPair& pair);

    /// Inverse of parse on canonical text, byte-exact round-trip.
    std::string format(const MapPair& pair) const;

    const std::vector<Block>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }

    std::int64_t exponent_sum(Letter l) const;
    std::int64_t block_count(Letter l) const;

    /// Letter of the leftmost block (applied last). Identity word: false.
    bool starts_with(Letter l) const { return !empty() && blocks_.front().letter == l; }
    /// Letter of the rightmost block (applied first). Identity word: false.
    bool ends_with(Letter l) const { return !empty() && blocks_.back().letter == l; }

    bool operator==(const Word&) const = default;

private:
    std::vector<Block> blocks_;  // composition order; invariants enforced by normalized()
};

/// Ground-truth evaluation: apply the pair's maps one at a time, rightmost
/// block first. The identity word returns n.
Rational evaluate_stepwise(const Word& w, const MapPair& pair, const Rational& n);

/// Folds power_closed + compose over the blocks into one affine map, then
/// applies it once. Agrees exactly with evaluate_stepwise.
Rational evaluate_closed(const Word& w, const MapPair& pair, const Rational& n);

/// The single affine map the whole word denotes.
AffineMap fold_closed(const Word& w, const MapPair& pair);

/// Exponent sums of a word with at least one second-letter block, indexed
/// the way the commutator-sum rearrangement consumes them. With l = number
/// of second-letter blocks, for 1 <= i <= l-1:
///   between(i) = first-letter exponents strictly between second block i
///                and second block l (a trailing first block is excluded);
///   before(i)  = second-letter exponents strictly before second block i,
///                so before(1) == 0.
struct IndexSums {
    std::int64_t first_total = 0;   // all first-letter exponents
    std::int64_t second_total = 0;  // all second-letter exponents
    std::vector<std::int64_t> between;
    std::vector<std::int64_t> before;

    std::int64_t between_at(std::int64_t i) const;  // 1-based, throws std::out_of_range
    std::int64_t before_at(std::int64_t i) const;
};

/// Throws std::invalid_argument when the word has no second-letter block.
IndexSums index_sums(const Word& w);

}  // namespace collatz
