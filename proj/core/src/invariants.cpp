#include "birack/invariants.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "birack/error.hpp"

namespace birack {

namespace {

// Every crossing reduces to S(l1, l2) = (r1, r2).
struct Relation {
    Semiarc l1, l2, r1, r2;
};

Relation relation_of(const Crossing& c) {
    if (c.sign > 0) return {c.under_out, c.over_in, c.over_out, c.under_in};
    return {c.under_in, c.over_out, c.over_in, c.under_out};
}

class LabelingSolver {
public:
    LabelingSolver(const LinkDiagram& d, const AugmentedBirack& b)
        : b_(b), n_(static_cast<Element>(b.size())), label_(d.semiarc_count(), 0), touching_(d.semiarc_count()) {
        for (const Crossing& c : d.crossings()) {
            const Relation r = relation_of(c);
            const auto idx = relations_.size();
            relations_.push_back(r);
            for (Semiarc e : {r.l1, r.l2, r.r1, r.r2}) {
                auto& list = touching_[static_cast<std::size_t>(e)];
                if (list.empty() || list.back() != idx) list.push_back(idx);
            }
        }
    }

    void run(const std::function<bool(const Labeling&)>& visit) {
        visit_ = &visit;
        stopped_ = false;
        search(0);
    }

private:
    bool assign(Semiarc e, Element v) {
        Element& slot = label_[static_cast<std::size_t>(e)];
        if (slot != 0) return slot == v;
        slot = v;
        trail_.push_back(e);
        pending_.push_back(e);
        return true;
    }

    bool apply(const Relation& r) {
        const auto get = [&](Semiarc e) { return label_[static_cast<std::size_t>(e)]; };
        Element l1 = get(r.l1), l2 = get(r.l2);
        const Element r1 = get(r.r1), r2 = get(r.r2);
        if (!l1 || !l2) {
            if (r1 && r2) {
                if (!assign(r.l1, b_.beta_bar(r1, r2)) || !assign(r.l2, b_.alpha_bar(r2, r1))) return false;
                return true;
            }
            if (l1 && r1) {
                l2 = b_.alpha_inv(l1, r1);
                if (!assign(r.l2, l2)) return false;
            } else if (l2 && r2) {
                l1 = b_.beta_inv(l2, r2);
                if (!assign(r.l1, l1)) return false;
            } else {
                return true;
            }
        }
        return assign(r.r1, b_.alpha(l1, l2)) && assign(r.r2, b_.beta(l2, l1));
    }

    bool propagate() {
        while (!pending_.empty()) {
            const Semiarc e = pending_.back();
            pending_.pop_back();
            for (std::size_t idx : touching_[static_cast<std::size_t>(e)])
                if (!apply(relations_[idx])) return false;
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            label_[static_cast<std::size_t>(trail_.back())] = 0;
            trail_.pop_back();
        }
        pending_.clear();
    }

    // Prefer a semiarc sharing a crossing with a labelled one; otherwise the
    // lowest unlabelled id.
    Semiarc choose(std::size_t from) const {
        for (const Relation& r : relations_) {
            const std::array<Semiarc, 4> e{r.l1, r.l2, r.r1, r.r2};
            bool any = false;
            Semiarc open = -1;
            for (Semiarc x : e) {
                if (label_[static_cast<std::size_t>(x)]) any = true;
                else if (open < 0) open = x;
            }
            if (any && open >= 0) return open;
        }
        for (std::size_t e = from; e < label_.size(); ++e)
            if (!label_[e]) return static_cast<Semiarc>(e);
        return -1;
    }

    void search(std::size_t from) {
        if (stopped_) return;
        while (from < label_.size() && label_[from]) ++from;
        const Semiarc e = choose(from);
        if (e < 0) {
            if (!(*visit_)(label_)) stopped_ = true;
            return;
        }
        for (Element v = 1; v <= n_ && !stopped_; ++v) {
            const std::size_t mark = trail_.size();
            if (assign(e, v) && propagate()) search(from);
            undo(mark);
        }
    }

    const AugmentedBirack& b_;
    Element n_;
    Labeling label_;
    std::vector<Relation> relations_;
    std::vector<std::vector<std::size_t>> touching_;
    std::vector<Semiarc> trail_, pending_;
    const std::function<bool(const Labeling&)>* visit_ = nullptr;
    bool stopped_ = false;
};

void check_shape(const LinkDiagram& d, const Labeling& f, std::size_t set_size) {
    if (f.size() != d.semiarc_count())
        throw Error(ErrorKind::InvalidLabeling, "labeling has " + std::to_string(f.size()) + " entries for " +
                                                    std::to_string(d.semiarc_count()) + " semiarcs");
    for (std::size_t e = 0; e < f.size(); ++e)
        if (f[e] < 1 || static_cast<std::size_t>(f[e]) > set_size)
            throw Error(ErrorKind::InvalidLabeling, "semiarc " + std::to_string(e) + " carries " + std::to_string(f[e]) +
                                                        ", outside 1.." + std::to_string(set_size));
}

struct TileCell {
    std::size_t count = 0;
    std::map<std::int64_t, std::size_t> weights;
};

TileCell evaluate_cell(const LinkDiagram& d, const AugmentedBirack& b, const Cochain2* phi) {
    TileCell cell;
    for_each_labeling(d, b, [&](const Labeling& f) {
        ++cell.count;
        if (phi) ++cell.weights[boltzmann_weight(d, f, *phi)];
        return true;
    });
    return cell;
}

std::string framing_string(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

InvariantResult tile_sum(const LinkDiagram& d, const AugmentedBirack& b, const Cochain2* phi, const InvariantOptions& opt) {
    const std::size_t c = d.component_count();
    const std::size_t big_n = b.characteristic();
    std::size_t tile = 1;
    for (std::size_t i = 0; i < c; ++i) {
        if (tile > opt.max_tile / big_n)
            throw Error(ErrorKind::ResourceLimit, "framing tile N^c = " + std::to_string(big_n) + "^" + std::to_string(c) +
                                                      " exceeds the limit " + std::to_string(opt.max_tile));
        tile *= big_n;
    }
    const std::vector<int> base = d.framing();
    auto offsets = [&](std::size_t index) {
        std::vector<int> k(c, 0);
        for (std::size_t i = c; i-- > 0;) {
            k[i] = static_cast<int>(index % big_n);
            index /= big_n;
        }
        return k;
    };

    std::vector<TileCell> cells(tile);
    std::vector<std::vector<int>> framings(tile);
    auto work = [&](std::size_t index) {
        const auto k = offsets(index);
        std::vector<int> target(c);
        for (std::size_t i = 0; i < c; ++i) target[i] = base[i] + k[i];
        framings[index] = target;
        cells[index] = evaluate_cell(with_framing(d, target), b, phi);
    };
    const std::size_t threads = std::min(std::max<std::size_t>(opt.threads, 1), tile);
    if (threads == 1) {
        for (std::size_t i = 0; i < tile; ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_lock;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < tile;) {
                    try {
                        work(i);
                    } catch (...) {
                        std::lock_guard lock(failure_lock);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    InvariantResult out;
    if (phi) out.poly = LaurentPolynomial{};
    for (std::size_t i = 0; i < tile; ++i) {
        out.per_framing.push_back({framings[i], cells[i].count});
        out.phi_z += cells[i].count;
        for (const auto& [w, mult] : cells[i].weights) {
            out.multiset[w] += mult;
            out.poly->add_term(static_cast<std::int64_t>(mult), static_cast<int>(w));
        }
    }
    return out;
}

}  // namespace

void for_each_labeling(const LinkDiagram& d, const AugmentedBirack& b, const std::function<bool(const Labeling&)>& visit) {
    LabelingSolver(d, b).run(visit);
}

std::vector<Labeling> enumerate_labelings(const LinkDiagram& d, const AugmentedBirack& b) {
    std::vector<Labeling> out;
    for_each_labeling(d, b, [&](const Labeling& f) {
        out.push_back(f);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_labelings(const LinkDiagram& d, const AugmentedBirack& b) {
    std::size_t count = 0;
    for_each_labeling(d, b, [&](const Labeling&) {
        ++count;
        return true;
    });
    return count;
}

std::optional<std::size_t> first_violated_crossing(const LinkDiagram& d, const AugmentedBirack& b, const Labeling& f) {
    check_shape(d, f, b.size());
    for (std::size_t i = 0; i < d.crossings().size(); ++i) {
        const Relation r = relation_of(d.crossings()[i]);
        const auto at = [&](Semiarc e) { return f[static_cast<std::size_t>(e)]; };
        if (b.alpha(at(r.l1), at(r.l2)) != at(r.r1) || b.beta(at(r.l2), at(r.l1)) != at(r.r2)) return i;
    }
    return std::nullopt;
}

std::vector<std::int64_t> crossing_weights(const LinkDiagram& d, const Labeling& f, const Cochain2& phi) {
    check_shape(d, f, phi.size());
    std::vector<std::int64_t> out;
    for (const Crossing& c : d.crossings()) {
        const Relation r = relation_of(c);
        out.push_back(c.sign * phi(f[static_cast<std::size_t>(r.l1)], f[static_cast<std::size_t>(r.l2)]));
    }
    return out;
}

std::int64_t boltzmann_weight(const LinkDiagram& d, const Labeling& f, const Cochain2& phi) {
    std::int64_t total = 0;
    for (auto w : crossing_weights(d, f, phi)) total += w;
    return total;
}

std::int64_t boltzmann_weight(const LinkDiagram& d, const AugmentedBirack& b, const Labeling& f, const Cochain2& phi) {
    if (phi.size() != b.size()) throw Error(ErrorKind::OutOfRange, "cochain and birack sizes differ");
    if (auto bad = first_violated_crossing(d, b, f))
        throw Error(ErrorKind::InvalidLabeling, "labeling breaks the relation at crossing " + std::to_string(*bad + 1));
    return boltzmann_weight(d, f, phi);
}

LinkDiagram with_framing(const LinkDiagram& d, const std::vector<int>& target) {
    const std::vector<int> base = d.framing();
    if (target.size() != base.size())
        throw Error(ErrorKind::BadFraming, "framing vector has " + std::to_string(target.size()) + " entries for " +
                                               std::to_string(base.size()) + " components");
    for (std::size_t i = 0; i < base.size(); ++i)
        if (target[i] < base[i])
            throw Error(ErrorKind::BadFraming, "framing " + framing_string(target) + " lies below the diagram framing " +
                                                   framing_string(base) + "; only positive kinks are added");
    LinkDiagram out = d;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (int k = base[i]; k < target[i]; ++k) out = add_positive_kink(out, i);
    return out;
}

InvariantResult counting_invariant(const LinkDiagram& d, const AugmentedBirack& b, const InvariantOptions& opt) {
    return tile_sum(d, b, nullptr, opt);
}

InvariantResult cocycle_invariant(const LinkDiagram& d, const AugmentedBirack& b, const Cochain2& phi,
                                  const InvariantOptions& opt) {
    if (phi.size() != b.size()) throw Error(ErrorKind::OutOfRange, "cochain and birack sizes differ");
    std::vector<std::string> warnings;
    if (!is_reduced_2_cocycle(b, phi)) {
        const std::string msg = "NotReducedCocycle: " + phi.to_string() +
                                " is not a reduced 2-cocycle; the tile sum is not a link invariant";
        if (opt.strict) throw Error(ErrorKind::NotReducedCocycle, msg);
        warnings.push_back(msg);
    }
    InvariantResult out = tile_sum(d, b, &phi, opt);
    out.warnings = std::move(warnings);
    return out;
}

InvariantResult framed_invariants(const LinkDiagram& d, const AugmentedBirack& b, const std::optional<Cochain2>& phi,
                                  const std::vector<int>& framing) {
    InvariantResult out;
    if (phi) {
        if (phi->size() != b.size()) throw Error(ErrorKind::OutOfRange, "cochain and birack sizes differ");
        if (!is_2_cocycle(b, *phi))
            out.warnings.push_back("NotReducedCocycle: " + phi->to_string() +
                                   " fails the 2-cocycle condition; the value depends on the diagram");
    }
    const TileCell cell = evaluate_cell(with_framing(d, framing), b, phi ? &*phi : nullptr);
    out.per_framing.push_back({framing, cell.count});
    out.phi_z = cell.count;
    if (phi) {
        out.poly = LaurentPolynomial{};
        for (const auto& [w, mult] : cell.weights) {
            out.multiset[w] = mult;
            out.poly->add_term(static_cast<std::int64_t>(mult), static_cast<int>(w));
        }
    }
    return out;
}

}  // namespace birack
