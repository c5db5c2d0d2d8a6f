#pragma once

#include <string>
#include <vector>

#include "wlab/basis.hpp"
#include "wlab/group.hpp"

namespace wlab::testing {

inline FreeProduct z2z2() { return load_group_spec("factor cyclic 2\nfactor cyclic 2\n"); }
inline FreeProduct z2z3() { return load_group_spec("factor cyclic 2\nfactor cyclic 3\n"); }
inline FreeProduct z3z2() { return load_group_spec("factor cyclic 3\nfactor cyclic 2\n"); }
inline FreeProduct z3z3() { return load_group_spec("factor cyclic 3\nfactor cyclic 3\n"); }
inline FreeProduct z2z2z2() {
    return load_group_spec("factor cyclic 2\nfactor cyclic 2\nfactor cyclic 2\n");
}

/// Word from (factor, elem) pairs, reduced.
inline Word w(const FreeProduct& fp, std::initializer_list<std::pair<int, int>> ls) {
    std::vector<Letter> raw;
    for (auto& [f, e] : ls) raw.push_back({f, e});
    return fp.reduce(raw);
}

}  // namespace wlab::testing
