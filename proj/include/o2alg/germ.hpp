// Germ<T>: a family (x_k)_{k >= 1} with finitely many exceptional values and
// one generic value taken at every other index.
//
// This is the data structure that makes the infinite products over the family
// of finite subgroups computable: locally constant Burnside functions, module
// components, stalks of sheaf objects are all stored this way. Normal form:
// an exceptional entry equal to the generic value is dropped.
#pragma once

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace o2alg {

template <typename T>
class Germ {
  public:
    Germ() : generic_{} {}
    explicit Germ(T generic) : generic_(std::move(generic)) {}
    Germ(std::map<int, T> exceptional, T generic)
        : exc_(std::move(exceptional)), generic_(std::move(generic)) {
        for (const auto& [k, v] : exc_)
            if (k < 1)
                throw std::invalid_argument("germ index must be >= 1");
        normalize();
    }

    static Germ constant(T v) { return Germ(std::move(v)); }

    const T& at(int k) const {
        auto it = exc_.find(k);
        return it == exc_.end() ? generic_ : it->second;
    }
    const T& generic() const { return generic_; }
    const std::map<int, T>& exceptional() const { return exc_; }

    void set(int k, T v) {
        if (k < 1)
            throw std::invalid_argument("germ index must be >= 1");
        if (v == generic_)
            exc_.erase(k);
        else
            exc_[k] = std::move(v);
    }
    void set_generic(T v) {
        generic_ = std::move(v);
        normalize();
    }

    // Smallest N such that every k >= N is generic.
    int bound() const { return exc_.empty() ? 1 : exc_.rbegin()->first + 1; }

    bool is_constant() const { return exc_.empty(); }

    template <typename F>
    auto map(F f) const -> Germ<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        std::map<int, U> exc;
        for (const auto& [k, v] : exc_) exc.emplace(k, f(v));
        return Germ<U>(std::move(exc), f(generic_));
    }

    template <typename U, typename F>
    static auto zip(const Germ& a, const Germ<U>& b, F f)
        -> Germ<decltype(f(std::declval<const T&>(), std::declval<const U&>()))> {
        using R = decltype(f(std::declval<const T&>(), std::declval<const U&>()));
        std::set<int> keys;
        for (const auto& [k, _] : a.exceptional()) keys.insert(k);
        for (const auto& [k, _] : b.exceptional()) keys.insert(k);
        std::map<int, R> exc;
        for (int k : keys) exc.emplace(k, f(a.at(k), b.at(k)));
        return Germ<R>(std::move(exc), f(a.generic(), b.generic()));
    }

    friend bool operator==(const Germ& a, const Germ& b) {
        return a.generic_ == b.generic_ && a.exc_ == b.exc_;
    }
    friend bool operator!=(const Germ& a, const Germ& b) { return !(a == b); }

  private:
    void normalize() {
        for (auto it = exc_.begin(); it != exc_.end();)
            it = (it->second == generic_) ? exc_.erase(it) : std::next(it);
    }

    std::map<int, T> exc_;
    T generic_;
};

// Union of exceptional index sets; the shared "relevant" indices when several
// germs enter one computation.
template <typename... Germs>
std::set<int> germ_indices(const Germs&... gs) {
    std::set<int> out;
    auto add = [&out](const auto& g) {
        for (const auto& [k, _] : g.exceptional()) out.insert(k);
    };
    (add(gs), ...);
    return out;
}

}  // namespace o2alg
