#include "rss/verify.hpp"

#include "rss/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace rss {

namespace {

using Check = std::function<std::optional<Counterexample>(std::string_view)>;

constexpr std::size_t batch_size = 1 << 15;

// runs the check over one batch on all cores; the earliest failure in the batch wins
std::optional<Counterexample> run_batch(const std::vector<Word>& batch, const Check& check) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
    std::vector<std::optional<std::pair<std::size_t, Counterexample>>> found(workers);
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t k = t; k < batch.size(); k += workers) {
                        if (auto c = check(batch[k])) {
                            found[t] = std::pair{k, std::move(*c)};
                            return;
                        }
                    }
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!failed.exchange(true)) error = std::current_exception();
                }
            });
    }
    if (error) std::rethrow_exception(error);
    std::optional<std::pair<std::size_t, Counterexample>> first;
    for (auto& f : found)
        if (f && (!first || f->first < first->first)) first = std::move(f);
    if (!first) return std::nullopt;
    return std::move(first->second);
}

Verdict over_words(const Language& lang, std::size_t length, const Check& check) {
    Verdict verdict;
    std::vector<Word> batch;
    auto flush = [&] {
        if (verdict.pass && !batch.empty()) {
            if (auto c = run_batch(batch, check)) {
                verdict.pass = false;
                verdict.witness = std::move(c);
            }
            verdict.checked += batch.size();
        }
        batch.clear();
    };
    lang.for_each_word(length, [&](std::string_view w) {
        if (!verdict.pass) return;
        batch.emplace_back(w);
        if (batch.size() == batch_size) flush();
    });
    flush();
    return verdict;
}

Verdict over_list(std::span<const Word> words, const Check& check) {
    Verdict verdict;
    const std::vector<Word> batch(words.begin(), words.end());
    if (auto c = run_batch(batch, check)) {
        verdict.pass = false;
        verdict.witness = std::move(c);
    }
    verdict.checked = batch.size();
    return verdict;
}

std::string_view centre(std::string_view w, std::size_t radius) { return w.substr(radius, w.size() - 2 * radius); }

std::size_t need(std::size_t radius) { return 2 * radius + 1; }

void require_length(std::string_view w, std::size_t radius) {
    if (w.size() < need(radius))
        throw TooShort("sample word of length " + std::to_string(w.size()) + " is shorter than " +
                       std::to_string(need(radius)));
}

Check identity_check(const SlidingBlockCode& f) {
    return [f](std::string_view w) -> std::optional<Counterexample> {
        require_length(w, f.radius());
        const Word out = apply_central(f, w);
        const std::string_view expected = centre(w, f.radius());
        if (out == expected) return std::nullopt;
        return Counterexample{Word(w), Word(expected), out};
    };
}

Check equal_check(const SlidingBlockCode& f, const SlidingBlockCode& g) {
    return [f, g](std::string_view w) -> std::optional<Counterexample> {
        const std::size_t r = std::max(f.radius(), g.radius());
        require_length(w, r);
        const Word x = apply_central(f, w.substr(r - f.radius(), w.size() - 2 * (r - f.radius())));
        const Word y = apply_central(g, w.substr(r - g.radius(), w.size() - 2 * (r - g.radius())));
        if (x == y) return std::nullopt;
        return Counterexample{Word(w), x, y};
    };
}

Check inverse_check(const SlidingBlockCode& f, const SlidingBlockCode& g) {
    return [f, g](std::string_view w) -> std::optional<Counterexample> {
        const std::size_t r = f.radius() + g.radius();
        require_length(w, r);
        const std::string_view expected = centre(w, r);
        for (const auto& [first, second] : {std::pair{&f, &g}, std::pair{&g, &f}}) {
            const Word out = apply_central(*second, apply_central(*first, w));
            if (out != expected) return Counterexample{Word(w), Word(expected), out};
        }
        return std::nullopt;
    };
}

Check legality_check(const SlidingBlockCode& code, const Language& lang) {
    return [&code, &lang](std::string_view w) -> std::optional<Counterexample> {
        require_length(w, code.radius());
        Word out = apply_central(code, w);
        if (lang.is_legal(out)) return std::nullopt;
        return Counterexample{Word(w), {}, std::move(out)};
    };
}

} // namespace

Verdict verify_endomorphism(const SlidingBlockCode& code, const Language& lang, std::size_t l_max) {
    if (l_max == 0) throw InvalidArgument("l_max must be positive");
    // shorter outputs are factors of longer ones, and every legal word extends
    return over_words(lang, 2 * code.radius() + l_max, legality_check(code, lang));
}

Verdict verify_inverse(const SlidingBlockCode& f, const SlidingBlockCode& g, const Language& lang) {
    return over_words(lang, need(f.radius() + g.radius()), inverse_check(f, g));
}

Verdict verify_equal(const SlidingBlockCode& f, const SlidingBlockCode& g, const Language& lang) {
    return over_words(lang, need(std::max(f.radius(), g.radius())), equal_check(f, g));
}

Verdict verify_commute(const SlidingBlockCode& f, const SlidingBlockCode& g, const Language& lang) {
    return verify_equal(compose(f, g), compose(g, f), lang);
}

Verdict verify_identity(const SlidingBlockCode& f, const Language& lang) {
    return over_words(lang, need(f.radius()), identity_check(f));
}

Verdict sample_endomorphism(const SlidingBlockCode& code, const Language& lang, std::span<const Word> words) {
    return over_list(words, legality_check(code, lang));
}

Verdict sample_inverse(const SlidingBlockCode& f, const SlidingBlockCode& g, std::span<const Word> words) {
    return over_list(words, inverse_check(f, g));
}

Verdict sample_equal(const SlidingBlockCode& f, const SlidingBlockCode& g, std::span<const Word> words) {
    return over_list(words, equal_check(f, g));
}

Verdict sample_identity(const SlidingBlockCode& f, std::span<const Word> words) {
    return over_list(words, identity_check(f));
}

std::optional<Word> nontrivial_witness(const SlidingBlockCode& code, const Language& lang) {
    const Verdict v = verify_identity(code, lang);
    if (v.pass) return std::nullopt;
    return v.witness->input;
}

std::optional<Word> nontrivial_witness(const SlidingBlockCode& code, std::span<const Word> words) {
    const Verdict v = sample_identity(code, words);
    if (v.pass) return std::nullopt;
    return v.witness->input;
}

SlidingBlockCode iterate(const SlidingBlockCode& f, unsigned k) {
    if (k == 0) return SlidingBlockCode::identity();
    SlidingBlockCode out = f;
    for (unsigned i = 1; i < k; ++i) out = compose(f, out);
    return out;
}

} // namespace rss
