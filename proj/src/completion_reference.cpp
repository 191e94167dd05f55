#include "qons/engine.hpp"
#include "completion_impl.hpp"

#include <algorithm>
#include <map>

namespace qons {

// Sequential mirror of complete(): identical wave scheduling and admission
// order, one ambiguity at a time. Kept as the baseline the OpenMP kernel is
// compared against bit for bit.
RewriteSystem complete_reference(PresentationPtr p, int degree_bound) {
    using namespace detail;
    RewriteSystem rs = initial_rules(std::move(p), degree_bound);

    std::map<size_t, std::vector<Ambiguity>> pending;
    std::vector<Ambiguity> buf;
    auto enqueue_for = [&](int n) {
        buf.clear();
        enumerate_ambiguities(rs.rules, n, degree_bound, buf);
        for (const auto& amb : buf) pending[amb.word_degree].push_back(amb);
    };
    for (int n = 0; n < int(rs.rules.size()); ++n) enqueue_for(n);

    while (!pending.empty()) {
        auto it = pending.begin();
        std::vector<Ambiguity> batch = std::move(it->second);
        pending.erase(it);
        rs.log.ambiguities_processed += batch.size();

        std::vector<Candidate> found;
        for (const auto& amb : batch) {
            if (auto cand = resolve_ambiguity(rs, amb)) found.push_back(std::move(*cand));
        }
        std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
            return mono_less(a.nf.leading_word(), b.nf.leading_word());
        });
        for (auto& cand : found) {
            size_t first_new = rs.rules.size();
            if (admit_and_simplify(rs, std::move(cand)) == 0) continue;
            for (size_t n = first_new; n < rs.rules.size(); ++n) enqueue_for(int(n));
        }
    }
    return rs;
}

}  // namespace qons
