#include "glmn/superjordan.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "dense.hpp"
#include "glmn/error.hpp"

namespace glmn {

bool block_order(const SuperJordanBlock& a, const SuperJordanBlock& b) {
    if (a.size != b.size) {
        return a.size > b.size;
    }
    return a.generator_parity == Parity::Even && b.generator_parity == Parity::Odd;
}

int even_slot_count(const SuperJordanBlock& b) {
    return b.generator_parity == Parity::Even ? (b.size + 1) / 2 : b.size / 2;
}

int odd_slot_count(const SuperJordanBlock& b) {
    return b.size - even_slot_count(b);
}

namespace {

// Parity of the chain vector at walk position j (0-based, top vector first).
Parity walk_parity(const SuperJordanBlock& b, int j) {
    return (b.size - 1 - j) % 2 == 0 ? b.generator_parity : opposite(b.generator_parity);
}

} // namespace

SuperMatrix super_jordan_matrix(const std::vector<SuperJordanBlock>& blocks, int m, int n) {
    int even_total = 0;
    int odd_total = 0;
    for (const auto& b : blocks) {
        if (b.size < 1) {
            throw ParityBudgetMismatch("block sizes must be positive");
        }
        even_total += even_slot_count(b);
        odd_total += odd_slot_count(b);
    }
    if (even_total != m || odd_total != n) {
        throw ParityBudgetMismatch("blocks fill (" + std::to_string(even_total) + "|" +
                                   std::to_string(odd_total) + "), expected (" +
                                   std::to_string(m) + "|" + std::to_string(n) + ")");
    }
    SuperMatrix g(m, n);
    int next_even = 0;
    int next_odd = m;
    for (const auto& b : blocks) {
        int prev_slot = -1;
        for (int j = 0; j < b.size; ++j) {
            const int slot =
                walk_parity(b, j) == Parity::Even ? next_even++ : next_odd++;
            if (j > 0) {
                g.set(prev_slot, slot, 1);
            }
            prev_slot = slot;
        }
    }
    return g;
}

SuperJordanType superjordan_decompose(const SuperMatrix& x) {
    if (!x.in_odd_subspace()) {
        throw NotOdd("decomposition expects an element of the odd subspace");
    }
    if (!is_nilpotent(x)) {
        throw NotNilpotent("matrix is not nilpotent");
    }
    const int m = x.even_dim();

    auto chains = detail::extract_chains(x);

    struct Realized {
        SuperJordanBlock block;
        std::vector<detail::Vec> vectors;  // generator first
    };
    std::vector<Realized> realized;
    for (const auto& chain : chains) {
        // Generators are homogeneous: x is odd, so the kernels of its powers
        // are graded and the kernel-basis vectors live in a single parity.
        Parity parity = Parity::Even;
        bool seen = false;
        for (std::size_t i = 0; i < chain.generator.size(); ++i) {
            if (chain.generator[i] != 0) {
                const Parity p =
                    static_cast<int>(i) < m ? Parity::Even : Parity::Odd;
                if (seen && p != parity) {
                    throw InternalRelationFailure("chain generator is not homogeneous");
                }
                parity = p;
                seen = true;
            }
        }
        realized.push_back(Realized{SuperJordanBlock{chain.length, parity},
                                    detail::chain_vectors(x, chain)});
    }
    std::stable_sort(realized.begin(), realized.end(),
                     [](const Realized& a, const Realized& b) {
                         return block_order(a.block, b.block);
                     });

    SuperJordanType type{{}, SuperMatrix(m, x.odd_dim())};
    int next_even = 0;
    int next_odd = m;
    for (const auto& rb : realized) {
        type.blocks.push_back(rb.block);
        // Top vector first; each vector takes the next slot of its parity.
        for (int j = 0; j < rb.block.size; ++j) {
            const auto& vec = rb.vectors[rb.block.size - 1 - j];
            const int slot =
                walk_parity(rb.block, j) == Parity::Even ? next_even++ : next_odd++;
            for (int row = 0; row < x.dim(); ++row) {
                type.basis.set(row, slot, vec[row]);
            }
        }
    }
    return type;
}

std::multiset<int> block_sizes(const SuperJordanType& t) {
    std::multiset<int> sizes;
    for (const auto& b : t.blocks) {
        sizes.insert(b.size);
    }
    return sizes;
}

OrbitParams params_from_blocks(const std::vector<SuperJordanBlock>& blocks) {
    int m = 0;
    int n = 0;
    int s = 0;
    std::vector<std::pair<int, MarkerClass>> j_blocks;  // (k, class)
    for (const auto& b : blocks) {
        if (b.size < 1) {
            throw InconsistentType("block sizes must be positive");
        }
        m += even_slot_count(b);
        n += odd_slot_count(b);
        if (b.size == 1) {
            continue;  // dimension padding
        }
        if (b.size % 2 == 1) {
            const int k = (b.size - 1) / 2;
            j_blocks.emplace_back(k, b.generator_parity == Parity::Even
                                         ? MarkerClass::ColumnOnly
                                         : MarkerClass::RowOnly);
        } else if (b.generator_parity == Parity::Odd) {
            j_blocks.emplace_back(b.size / 2, MarkerClass::Unmarked);
        } else if (b.size == 2) {
            ++s;
        } else {
            j_blocks.emplace_back((b.size - 2) / 2, MarkerClass::ColumnAndRow);
        }
    }
    std::sort(j_blocks.begin(), j_blocks.end(),
              [](const std::pair<int, MarkerClass>& a, const std::pair<int, MarkerClass>& b) {
                  if (a.first != b.first) {
                      return a.first > b.first;
                  }
                  return a.second < b.second;
              });
    std::vector<int> k;
    std::set<int> column_marked;
    std::set<int> row_marked;
    for (std::size_t i = 0; i < j_blocks.size(); ++i) {
        k.push_back(j_blocks[i].first);
        const int pos = static_cast<int>(i) + 1;
        if (j_blocks[i].second == MarkerClass::ColumnAndRow ||
            j_blocks[i].second == MarkerClass::ColumnOnly) {
            column_marked.insert(pos);
        }
        if (j_blocks[i].second == MarkerClass::ColumnAndRow ||
            j_blocks[i].second == MarkerClass::RowOnly) {
            row_marked.insert(pos);
        }
    }
    try {
        return OrbitParams::validate(m, n, std::move(k), column_marked, row_marked, s);
    } catch (const ValidationError& err) {
        throw InconsistentType(std::string("no valid parameters for this type: ") +
                               err.what());
    }
}

OrbitParams params_from_type(const SuperJordanType& t) {
    return params_from_blocks(t.blocks);
}

std::multiset<int> block_sizes_of_params(const OrbitParams& p) {
    std::multiset<int> sizes;
    for (int pos = 1; pos <= p.t(); ++pos) {
        const int k = p.k()[pos - 1];
        switch (p.marker_class(pos)) {
            case MarkerClass::ColumnAndRow:
                sizes.insert(2 * k + 2);
                break;
            case MarkerClass::ColumnOnly:
            case MarkerClass::RowOnly:
                sizes.insert(2 * k + 1);
                break;
            case MarkerClass::Unmarked:
                sizes.insert(2 * k);
                break;
        }
    }
    for (int u = 0; u < p.tail(); ++u) {
        sizes.insert(2);
    }
    const int pad_even = p.even_dim() - p.r() - p.r1() - p.tail();
    const int pad_odd = p.odd_dim() - p.r() - p.r2() - p.tail();
    for (int u = 0; u < pad_even + pad_odd; ++u) {
        sizes.insert(1);
    }
    return sizes;
}

} // namespace glmn
