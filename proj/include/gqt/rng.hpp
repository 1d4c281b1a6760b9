#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace gqt {

/// Seeded generator with platform-independent draws. std::mt19937_64 output is
/// fixed by the standard; the standard distributions are not, so bounded draws
/// reduce the raw output directly.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace gqt
