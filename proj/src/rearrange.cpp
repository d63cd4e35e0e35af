#include "collatz/rearrange.hpp"

#include <stdexcept>

namespace collatz {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::NotApplicable: return "na";
    }
    return "na";
}

bool commutator_sum_applicable(const Word& w) {
    return w.starts_with(Letter::First) && w.ends_with(Letter::First) &&
           w.block_count(Letter::Second) >= 2;
}

Rational normal_form_value(const Word& w, const Rational& n) {
    const std::int64_t se = w.exponent_sum(Letter::First);
    const std::int64_t so = w.exponent_sum(Letter::Second);
    const Rational inner = Rational(3, 2).pow(so) * (n + Rational(1)) - Rational(1);
    return Rational(1, 2).pow(se) * inner;
}

Rational correction_direct(const Word& w, const Rational& n) {
    return evaluate_stepwise(w, MapPair::collatz(), n) - normal_form_value(w, n);
}

namespace {

std::string power_text(char label, std::int64_t exponent) {
    return std::string(1, label) + "^" + std::to_string(exponent);
}

std::string scale_text(const char* base, std::int64_t exponent) {
    return "(" + std::string(base) + ")^" + std::to_string(exponent);
}

}  // namespace

Rational correction_commutator_sum(const Word& w,
                                   std::vector<std::pair<std::string, Rational>>* terms) {
    if (!w.starts_with(Letter::First)) {
        throw std::invalid_argument("commutator sum needs a word starting with a first-letter block");
    }
    if (!w.ends_with(Letter::First)) {
        throw std::invalid_argument("commutator sum needs a word ending with a first-letter block");
    }
    const std::int64_t l = w.block_count(Letter::Second);
    if (l < 2) {
        throw std::invalid_argument("commutator sum needs at least two second-letter blocks");
    }

    const MapPair pair = MapPair::collatz();
    const IndexSums sums = index_sums(w);

    // Bracketed words alternate E^{e1} O^{o1} ... O^{ol} E^{el+1}.
    std::vector<std::int64_t> e, o;
    for (const Block& b : w.blocks())
        (b.letter == Letter::First ? e : o).push_back(b.exponent);
    const std::int64_t trailing_first = e.back();

    const auto commutator = [&](std::int64_t a, std::int64_t b) {
        return commutator_constant(power_closed(pair.second, a), power_closed(pair.first, b));
    };

    // The whole second-letter run moved through the trailing first block.
    Rational total = Rational(1, 2).pow(sums.first_total - trailing_first) *
                     commutator(sums.second_total, trailing_first);
    if (terms) {
        terms->push_back({scale_text("1/2", sums.first_total - trailing_first) + " * [" +
                              power_text(pair.second.label(), sums.second_total) + "," +
                              power_text(pair.first.label(), trailing_first) + "]",
                          total});
    }

    // One term per interior second block; the scale is the prefix of first
    // exponents (e1+...+ei) and the seconds already moved past (before(i)).
    std::int64_t first_prefix = 0;
    for (std::int64_t i = 1; i <= l - 1; ++i) {
        first_prefix += e[static_cast<std::size_t>(i - 1)];
        const Rational term = Rational(1, 2).pow(first_prefix) *
                              Rational(3, 2).pow(sums.before_at(i)) *
                              commutator(o[static_cast<std::size_t>(i - 1)], sums.between_at(i));
        if (terms) {
            terms->push_back({scale_text("1/2", first_prefix) + " * " +
                                  scale_text("3/2", sums.before_at(i)) + " * [" +
                                  power_text(pair.second.label(), o[static_cast<std::size_t>(i - 1)]) + "," +
                                  power_text(pair.first.label(), sums.between_at(i)) + "]",
                              term});
        }
        total += term;
    }
    return total;
}

RearrangeResult rearrange_iterative(const Word& w, const MapPair& pair) {
    RearrangeResult result;
    result.correction = Rational(0);

    std::vector<Block> blocks = w.blocks();
    for (;;) {
        // Leftmost adjacent pair with a second-letter block left of a
        // first-letter block.
        std::size_t t = 0;
        bool found = false;
        for (; t + 1 < blocks.size(); ++t) {
            if (blocks[t].letter == Letter::Second && blocks[t + 1].letter == Letter::First) {
                found = true;
                break;
            }
        }
        if (!found) break;

        // word = P o second^k o first^j o S. Swapping the pair changes the
        // value by slope(P) * [first^j, second^k], which the commutator
        // identity pays back as a constant.
        const std::int64_t k = blocks[t].exponent;
        const std::int64_t j = blocks[t + 1].exponent;
        Rational prefix_slope(1);
        for (std::size_t p = 0; p < t; ++p) {
            const AffineMap& map = blocks[p].letter == Letter::First ? pair.first : pair.second;
            prefix_slope *= map.slope().pow(blocks[p].exponent);
        }
        const Rational delta =
            -(prefix_slope *
              commutator_constant(power_closed(pair.first, j), power_closed(pair.second, k)));
        result.correction += delta;

        std::swap(blocks[t], blocks[t + 1]);
        Word state = Word::normalized(std::move(blocks));
        blocks = state.blocks();
        result.steps.push_back({std::move(state), delta, result.correction});
    }

    result.normal_word = Word::normalized(std::move(blocks));
    return result;
}

RearrangementReport analyze(const Word& w, const Rational& n) {
    if (!commutator_sum_applicable(w)) {
        // Surface the precise reason.
        correction_commutator_sum(w);
    }
    if (!n.is_positive()) {
        throw std::invalid_argument("rearrangement report needs positive n");
    }

    RearrangementReport report;
    report.word = w;
    report.n = n;
    report.word_value = evaluate_stepwise(w, MapPair::collatz(), n);
    report.normal_value = normal_form_value(w, n);
    report.correction_direct = report.word_value - report.normal_value;
    report.correction_sum = correction_commutator_sum(w, &report.terms);
    report.correction_iterative = rearrange_iterative(w, MapPair::collatz()).correction;

    if (report.correction_direct != report.correction_sum ||
        report.correction_direct != report.correction_iterative) {
        throw std::logic_error("correction routes disagree on word " +
                               w.format(MapPair::collatz()));
    }

    const Rational& c = report.correction_direct;
    report.bounds_ok = Rational(0) < c && c < report.word_value;
    report.ceiling_identity = check_ceiling_identity(w, n);
    report.exponent_inequality = check_exponent_inequality(w, n);
    return report;
}

namespace {

bool identity_checks_applicable(const Word& w, const Rational& n) {
    return commutator_sum_applicable(w) &&
           evaluate_stepwise(w, MapPair::collatz(), n) == Rational(1);
}

}  // namespace

Verdict check_ceiling_identity(const Word& w, const Rational& n) {
    if (!identity_checks_applicable(w, n)) return Verdict::NotApplicable;
    return normal_form_value(w, n).ceil() == Rational(1) ? Verdict::Holds : Verdict::Fails;
}

Verdict check_exponent_inequality(const Word& w, const Rational& n) {
    if (!identity_checks_applicable(w, n)) return Verdict::NotApplicable;
    const Rational lhs = (n + Rational(1)) / (Rational(2).pow(w.exponent_sum(Letter::First)) + Rational(1));
    const Rational rhs = Rational(2, 3).pow(w.exponent_sum(Letter::Second));
    return lhs < rhs ? Verdict::Holds : Verdict::Fails;
}

}  // namespace collatz
