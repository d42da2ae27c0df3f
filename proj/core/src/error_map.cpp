#include <algorithm>
#include <atomic>
#include <thread>

#include "galperin/base_repr.hpp"
#include "galperin/closed_form.hpp"
#include "galperin/errors.hpp"

namespace galperin {

ErrorMap error_map(const std::vector<Rational>& bases, const std::vector<Rational>& mantissas,
                   unsigned workers, long cap_bits) {
    for (const auto& b : bases)
        if (!(b > Rational(1))) throw InvalidArgument("error map bases must exceed 1");
    for (const auto& n : mantissas)
        if (n.sign() < 0) throw InvalidArgument("error map mantissas must be non-negative");

    ErrorMap map;
    map.bases = bases;
    map.mantissas = mantissas;
    const std::size_t total = bases.size() * mantissas.size();
    map.cells.resize(total);

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next.fetch_add(1); k < total; k = next.fetch_add(1)) {
            ErrorCell& cell = map.cells[k];
            cell.b = bases[k % bases.size()];
            cell.N = mantissas[k / bases.size()];
            try {
                const CollisionCount c = collision_count(Real(cell.b), cell.N, cap_bits);
                cell.epsilon = c.degenerate && !c.degenerate_certified ? -1 : c.epsilon;
            } catch (const Error&) {
                cell.epsilon = -1;
            }
        }
    };

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    for (std::size_t k = 0; k < total; ++k)
        if (map.cells[k].epsilon < 0) map.ambiguous.push_back(k);
    return map;
}

}  // namespace galperin
