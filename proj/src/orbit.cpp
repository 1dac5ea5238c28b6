#include "polyspec/orbit.hpp"

#include <unordered_set>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

struct ExactEntry {
    std::vector<int> word;
    std::vector<RationalMatrix> factors;
};

struct FloatEntry {
    std::vector<int> word;
    std::vector<ScaledMatrix> factors;
};

std::vector<ScaledMatrix> scale_factors(const std::vector<RationalMatrix>& fs) {
    std::vector<ScaledMatrix> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(to_scaled(f));
    return out;
}

}  // namespace

OrbitData enumerate_ball(const std::vector<GroupElement>& generators, bool include_inverses,
                         int max_word_length, std::size_t max_elements) {
    if (generators.empty()) throw ParameterError("enumerate_ball requires at least one generator");
    if (max_word_length < 1) throw ParameterError("max_word_length must be at least 1");

    const Realization realization = generators.front().realization;
    const int factor_count = generators.front().factor_count();
    const int dim = generators.front().dim();
    for (const auto& g : generators)
        if (g.realization != realization || g.factor_count() != factor_count || g.dim() != dim)
            throw ParameterError("generators must share one realization");

    OrbitData data;
    data.realization = realization;
    data.dim = realization == Realization::SLn ? dim : factor_count;
    data.generator_count = static_cast<int>(generators.size());
    data.include_inverses = include_inverses;
    data.exact = true;
    for (const auto& g : generators) data.exact = data.exact && g.is_exact();

    std::vector<GroupElement> letters = generators;
    if (include_inverses)
        for (const auto& g : generators) letters.push_back(inverse(g));
    const int letter_count = static_cast<int>(letters.size());

    auto emit = [&](const std::vector<int>& word, const Eigen::VectorXd& mu) {
        if (data.samples.size() >= max_elements)
            throw ResourceError("ball enumeration exceeded the element cap");
        data.samples.push_back({word, mu});
    };

    if (data.exact) {
        std::vector<std::vector<RationalMatrix>> letter_exact;
        for (const auto& l : letters) letter_exact.push_back(*l.exact);

        std::unordered_set<std::string> seen;
        std::vector<ExactEntry> frontier;
        {
            ExactEntry id;
            for (int i = 0; i < factor_count; ++i) id.factors.push_back(RationalMatrix::identity(dim));
            seen.insert(canonical_key(id.factors));
            emit(id.word, scaled_cartan_projection(scale_factors(id.factors), realization));
            frontier.push_back(std::move(id));
        }

        for (int level = 1; level <= max_word_length; ++level) {
            std::vector<ExactEntry> next;
            for (const auto& entry : frontier) {
                for (int j = 0; j < letter_count; ++j) {
                    ExactEntry cand;
                    cand.word = entry.word;
                    cand.word.push_back(j);
                    for (int i = 0; i < factor_count; ++i)
                        cand.factors.push_back(multiply(entry.factors[i], letter_exact[j][i]));
                    if (!seen.insert(canonical_key(cand.factors)).second) continue;
                    emit(cand.word, scaled_cartan_projection(scale_factors(cand.factors), realization));
                    next.push_back(std::move(cand));
                }
            }
            frontier = std::move(next);
            if (frontier.empty()) break;
        }
        return data;
    }

    data.warning =
        "generators have non-rational entries; deduplicating by freely reduced word only, "
        "group relations will not be detected";

    // letter j cancels letter j +/- generator_count when inverses are present
    auto cancels = [&](int last, int j) {
        if (!include_inverses) return false;
        return j == last + data.generator_count || last == j + data.generator_count;
    };

    std::vector<std::vector<ScaledMatrix>> letter_scaled;
    for (const auto& l : letters) {
        std::vector<ScaledMatrix> fs;
        for (const auto& f : l.factors) fs.push_back(to_scaled(f));
        letter_scaled.push_back(std::move(fs));
    }

    std::vector<FloatEntry> frontier;
    {
        FloatEntry id;
        for (int i = 0; i < factor_count; ++i)
            id.factors.push_back(to_scaled(Eigen::MatrixXd(Eigen::MatrixXd::Identity(dim, dim))));
        emit(id.word, scaled_cartan_projection(id.factors, realization));
        frontier.push_back(std::move(id));
    }

    for (int level = 1; level <= max_word_length; ++level) {
        std::vector<FloatEntry> next;
        for (const auto& entry : frontier) {
            for (int j = 0; j < letter_count; ++j) {
                if (!entry.word.empty() && cancels(entry.word.back(), j)) continue;
                FloatEntry cand;
                cand.word = entry.word;
                cand.word.push_back(j);
                for (int i = 0; i < factor_count; ++i)
                    cand.factors.push_back(multiply(entry.factors[i], letter_scaled[j][i]));
                emit(cand.word, scaled_cartan_projection(cand.factors, realization));
                next.push_back(std::move(cand));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return data;
}

}  // namespace polyspec
