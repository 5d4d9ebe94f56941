#include "trichain/reg2sim.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "trichain/psqf.hpp"
#include "uniroot.hpp"

namespace trichain {

namespace {

struct Item {
    size_t k;
    std::vector<MPoly> prefix;
    MultiplicityArray arr;
};

Decomposition reg2sim_impl(const TriangularSet& T, const VarOrder& order) {
    std::vector<SimpleBranch> branches;
    std::vector<Item> stack;
    stack.push_back({0, {}, {}});
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        if (it.k == T.size()) {
            branches.push_back({TriangularSet(std::move(it.prefix)), std::move(it.arr)});
            continue;
        }
        const MPoly& A = T.poly(it.k);
        TriangularSet Q{std::vector<MPoly>(it.prefix)};
        for (const PsqfBranch& br : psqf(A, Q, static_cast<int>(it.k))) {
            if (br.components.empty())
                throw std::logic_error("reg2sim: chain element degenerated on a branch");
            for (const SqfComponent& comp : br.components) {
                std::vector<MPoly> pieces;
                if (it.k == 0) {
                    // split rational-root linear factors off the cofactor
                    if (auto sp = detail::rational_block_split(comp.P)) {
                        pieces.push_back(sp->first);
                        pieces.push_back(sp->second);
                    } else {
                        pieces.push_back(comp.P);
                    }
                } else {
                    pieces.push_back(comp.P);
                }
                for (MPoly& piece : pieces) {
                    Item next;
                    next.k = it.k + 1;
                    next.prefix = br.chain.polys();
                    next.prefix.push_back(std::move(piece));
                    next.arr = it.arr;
                    next.arr.push_back(comp.a);
                    stack.push_back(std::move(next));
                }
            }
        }
    }

    std::sort(branches.begin(), branches.end(), [&](const SimpleBranch& a, const SimpleBranch& b) {
        return to_string(a.chain, order) < to_string(b.chain, order);
    });

    // CRT identity: sum over branches of prod p_i*deg(B_i) = prod deg(T_i)
    long long lhs = 0;
    for (const auto& b : branches) {
        long long t = 1;
        for (size_t i = 0; i < b.array.size(); ++i)
            t *= static_cast<long long>(b.array[i]) * b.chain.poly(i).main_degree();
        lhs += t;
    }
    if (lhs != chain_dimension(T))
        throw std::logic_error("reg2sim: dimension identity violated (internal bug)");

    return {std::move(branches), T};
}

std::string cache_key(const ZeroDimChain& T) {
    std::string key;
    for (const auto& n : T.order().names()) key += n + " ";
    key += "|" + to_string(T.set(), T.order());
    return key;
}

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const Decomposition>>& cache() {
    static std::map<std::string, std::shared_ptr<const Decomposition>> c;
    return c;
}

} // namespace

Decomposition reg2sim(const ZeroDimChain& T) { return reg2sim_impl(T.set(), T.order()); }

std::shared_ptr<const Decomposition> reg2sim_cached(const ZeroDimChain& T) {
    const std::string key = cache_key(T);
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }
    auto dec = std::make_shared<const Decomposition>(reg2sim_impl(T.set(), T.order()));
    std::lock_guard<std::mutex> lk(cache_mutex);
    auto [it, inserted] = cache().emplace(key, std::move(dec));
    return it->second;
}

std::pair<size_t, long long> reg_mult_branch(const ZeroDimChain& T,
                                             const std::vector<GaussianRational>& a) {
    if (a.size() != T.size()) throw std::domain_error("point dimension does not match the chain");
    for (const auto& p : T.set().polys())
        if (!eval(p, a).is_zero()) throw std::domain_error("point is not a zero");
    auto dec = reg2sim_cached(T);
    size_t match = dec->branches.size();
    for (size_t i = 0; i < dec->branches.size(); ++i) {
        bool vanishes = true;
        for (const auto& p : dec->branches[i].chain.polys())
            if (!eval(p, a).is_zero()) {
                vanishes = false;
                break;
            }
        if (vanishes) {
            if (match != dec->branches.size())
                throw std::logic_error("reg_mult: zero lies on two branches (invariant violation)");
            match = i;
        }
    }
    if (match == dec->branches.size())
        throw std::logic_error("reg_mult: zero lies on no branch (invariant violation)");
    return {match, dec->branches[match].product()};
}

long long reg_mult(const ZeroDimChain& T, const std::vector<GaussianRational>& a) {
    return reg_mult_branch(T, a).second;
}

} // namespace trichain
