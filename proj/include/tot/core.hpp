#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tot {

// Vertex sets are bitmasks; graphs are limited to 64 vertices.
using VSet = std::uint64_t;
using Id = std::int32_t;

constexpr int kMaxVertices = 64;

inline int popcount(VSet s) { return std::popcount(s); }
inline bool subset(VSet a, VSet b) { return (a & ~b) == 0; }
inline VSet bit(int v) { return VSet{1} << v; }
inline bool has(VSet s, int v) { return (s >> v) & 1u; }
inline VSet full_set(int n) { return n >= 64 ? ~VSet{0} : (VSet{1} << n) - 1; }

template <class F>
inline void for_each_vertex(VSet s, F&& f) {
    while (s) {
        int v = std::countr_zero(s);
        f(v);
        s &= s - 1;
    }
}

std::vector<int> to_list(VSet s);
VSet from_list(const std::vector<int>& vs);
std::string set_str(VSet s);

// Lexicographic order on the sorted element lists.
bool lex_less(VSet x, VSet y);

enum class ErrorKind {
    NotACover,
    CrossingEdge,
    MismatchedGround,
    NotInSystem,
    TooLarge,
    NotAStar,
    NotInProfile,
    Indistinct,
    NotNested,
    Irregular,
    NoTangles,
    VerificationFailed,
    HypothesisFailure,
    SearchExhausted,
    EmulationFailure,
    OutOfDomain,
    NotExclusiveAnywhere,
    StepBudgetExceeded,
    NonDistributive,
    ParseError,
    InvalidInput,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Growable bitset used for orientations and owner sets.
class DynBits {
public:
    DynBits() = default;
    explicit DynBits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    DynBits& operator&=(const DynBits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    DynBits& operator|=(const DynBits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    bool subset_of(const DynBits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            auto x = w_[i];
            while (x) {
                out.push_back(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }
    bool operator==(const DynBits& o) const = default;
    auto operator<=>(const DynBits& o) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace tot
