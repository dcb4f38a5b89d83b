#include "mmsaa/suffix_tree.hpp"

#include <algorithm>
#include <cassert>

namespace mmsaa {

namespace {

uint8_t char_code(char c) {
    switch (c) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        case 'T': return 3;
        case 'N': return 4;
        case GeneralizedSuffixTree::kSep1: return 5;
        case GeneralizedSuffixTree::kSep2: return 6;
    }
    return 4;  // anything unexpected behaves like 'N'
}

}  // namespace

GeneralizedSuffixTree::GeneralizedSuffixTree(std::string_view s1,
                                             std::string_view s2)
    : len1_(static_cast<int64_t>(s1.size())),
      len2_(static_cast<int64_t>(s2.size())) {
    text_.reserve(s1.size() + s2.size() + 2);
    text_.append(s1);
    text_.push_back(kSep1);
    text_.append(s2);
    text_.push_back(kSep2);

    const int32_t n = static_cast<int32_t>(text_.size());
    code_.resize(n);
    for (int32_t i = 0; i < n; ++i) code_[i] = char_code(text_[i]);

    next_special_.resize(n + 1);
    next_special_[n] = n;
    for (int32_t i = n - 1; i >= 0; --i)
        next_special_[i] = code_[i] >= 4 ? i : next_special_[i + 1];

    nodes_.reserve(2 * static_cast<size_t>(n) + 4);
    root_ = new_node(-1, -1);
    active_node_ = root_;
    for (int32_t pos = 0; pos < n; ++pos) extend(pos);
    finalize();
}

int32_t GeneralizedSuffixTree::new_node(int32_t start, int32_t end) {
    Node nd;
    nd.start = start;
    nd.end = end;
    nd.child.fill(-1);
    nodes_.push_back(nd);
    return static_cast<int32_t>(nodes_.size()) - 1;
}

int32_t GeneralizedSuffixTree::edge_length(int32_t v, int32_t pos) const {
    return std::min(nodes_[v].end == kLeafEnd ? pos + 1 : nodes_[v].end,
                    pos + 1) -
           nodes_[v].start;
}

void GeneralizedSuffixTree::add_suffix_link(int32_t v) {
    if (need_sl_ != -1 && need_sl_ != root_) nodes_[need_sl_].link = v;
    need_sl_ = v;
}

void GeneralizedSuffixTree::extend(int32_t pos) {
    const uint8_t c = code_[pos];
    need_sl_ = -1;
    ++remainder_;
    while (remainder_ > 0) {
        if (active_length_ == 0) active_edge_ = pos;
        const uint8_t edge_c = code_[active_edge_];
        int32_t child = nodes_[active_node_].child[edge_c];
        if (child == -1) {
            int32_t leaf = new_node(pos, kLeafEnd);
            nodes_[active_node_].child[edge_c] = leaf;
            add_suffix_link(active_node_);
        } else {
            int32_t el = edge_length(child, pos);
            if (active_length_ >= el) {  // walk down
                active_edge_ += el;
                active_length_ -= el;
                active_node_ = child;
                continue;
            }
            if (code_[nodes_[child].start + active_length_] == c) {
                ++active_length_;
                add_suffix_link(active_node_);
                break;
            }
            int32_t split =
                new_node(nodes_[child].start, nodes_[child].start + active_length_);
            nodes_[active_node_].child[edge_c] = split;
            int32_t leaf = new_node(pos, kLeafEnd);
            nodes_[split].child[c] = leaf;
            nodes_[child].start += active_length_;
            nodes_[split].child[code_[nodes_[child].start]] = child;
            add_suffix_link(split);
        }
        --remainder_;
        if (active_node_ == root_ && active_length_ > 0) {
            --active_length_;
            active_edge_ = pos - remainder_ + 1;
        } else if (active_node_ != root_) {
            active_node_ =
                nodes_[active_node_].link != -1 ? nodes_[active_node_].link : root_;
        }
    }
}

void GeneralizedSuffixTree::finalize() {
    const int32_t n = static_cast<int32_t>(code_.size());
    for (auto& nd : nodes_)
        if (nd.end == kLeafEnd) nd.end = n;
    // assign suffix starts to leaves: suffix = text size - path length
    struct Item {
        int32_t node;
        int32_t depth;  // string depth at the node (below its edge)
    };
    std::vector<Item> stack{{root_, 0}};
    while (!stack.empty()) {
        auto [v, depth] = stack.back();
        stack.pop_back();
        bool leaf = true;
        for (int k = 0; k < kAlphabet; ++k) {
            int32_t ch = nodes_[v].child[k];
            if (ch == -1) continue;
            leaf = false;
            stack.push_back({ch, depth + (nodes_[ch].end - nodes_[ch].start)});
        }
        if (leaf && v != root_) nodes_[v].suffix_start = n - depth;
    }
}

std::vector<int> GeneralizedSuffixTree::children_of(int v) const {
    std::vector<int> out;
    for (int k = 0; k < kAlphabet; ++k)
        if (nodes_[v].child[k] != -1) out.push_back(nodes_[v].child[k]);
    return out;
}

std::string_view GeneralizedSuffixTree::edge_label(int v) const {
    if (v == root_) return {};
    return std::string_view(text_).substr(nodes_[v].start,
                                          nodes_[v].end - nodes_[v].start);
}

int64_t GeneralizedSuffixTree::leaf_count() const {
    int64_t count = 0;
    for (const auto& nd : nodes_)
        if (nd.suffix_start >= 0) ++count;
    return count;
}

std::vector<std::string> GeneralizedSuffixTree::root_to_leaf_paths() const {
    std::vector<std::string> out;
    struct Item {
        int32_t node;
        std::string path;
    };
    std::vector<Item> stack{{root_, ""}};
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        bool leaf = true;
        for (int k = 0; k < kAlphabet; ++k) {
            int32_t ch = nodes_[it.node].child[k];
            if (ch == -1) continue;
            leaf = false;
            stack.push_back(
                {ch, it.path + std::string(text_.substr(
                         nodes_[ch].start, nodes_[ch].end - nodes_[ch].start))});
        }
        if (leaf && it.node != root_) out.push_back(std::move(it.path));
    }
    return out;
}

std::pair<int, int64_t> GeneralizedSuffixTree::locate(int64_t text_pos) const {
    if (text_pos < len1_) return {0, text_pos};
    if (text_pos == len1_) return {-1, 0};
    if (text_pos < len1_ + 1 + len2_) return {1, text_pos - len1_ - 1};
    return {-1, 0};
}

// ---------------------------------------------------------------------------
// MEM enumeration.
//
// Cross pairs of leaves from different children of an internal node are
// right-maximal by construction; left-maximality is decided by the class of
// the character preceding each suffix (A/C/G/T, or "other" for boundary, 'N'
// and sentinel, which mismatch everything). Matches whose text contains 'N'
// are byte-equal but invalid under the N-mismatches-everything rule and get
// split into their N-free fragments; the fragments are maximal because each
// cut edge is flanked by 'N'. Splitting can rediscover a pair emitted
// elsewhere, hence the final sort+unique.
// ---------------------------------------------------------------------------

namespace {
constexpr int kClasses = 5;  // A,C,G,T + other (boundary / N / sentinel)

struct LeafLists {
    // head/tail of singly linked lists of leaf node ids, per (seq, class)
    int32_t head[2][kClasses];
    int32_t tail[2][kClasses];
    LeafLists() {
        for (auto& h : head)
            for (auto& x : h) x = -1;
        for (auto& t : tail)
            for (auto& x : t) x = -1;
    }
};

bool left_maximal(int ca, int cb) { return ca != cb || ca == kClasses - 1; }

}  // namespace

std::vector<Match> GeneralizedSuffixTree::enumerate_mmss(
    int64_t min_length) const {
    if (min_length < 1) min_length = 1;
    std::vector<Match> out;
    std::vector<int32_t> next(nodes_.size(), -1);

    auto classify = [&](int64_t p, int& seq, int& cls) {
        if (p < len1_)
            seq = 0;
        else if (p > len1_ && p < len1_ + 1 + len2_)
            seq = 1;
        else {
            seq = -1;
            return;
        }
        if (p == 0 || code_[p - 1] >= 4)
            cls = kClasses - 1;
        else
            cls = code_[p - 1];
    };

    auto emit_pair = [&](int64_t pa, int seq_a, int64_t pb, int64_t depth) {
        // pa belongs to seq_a; pb to the other sequence
        int64_t pos1 = seq_a == 0 ? pa : pb;
        int64_t pos2 = (seq_a == 0 ? pb : pa) - (len1_ + 1);
        // split at N positions (slices are byte-equal, N offsets coincide)
        int64_t s = pos1;
        const int64_t e = pos1 + depth;
        while (s < e) {
            int64_t cut = std::min<int64_t>(next_special_[s], e);
            int64_t frag = cut - s;
            if (frag >= min_length)
                out.push_back(Match{s, pos2 + (s - pos1), frag, 0, MatchKind::Mmss});
            s = cut + 1;
        }
    };

    auto emit_cross = [&](const LeafLists& a, const LeafLists& b, int64_t depth) {
        for (int seq_a = 0; seq_a < 2; ++seq_a) {
            for (int ca = 0; ca < kClasses; ++ca) {
                int32_t la = a.head[seq_a][ca];
                if (la == -1) continue;
                for (int cb = 0; cb < kClasses; ++cb) {
                    if (!left_maximal(ca, cb)) continue;
                    if (b.head[1 - seq_a][cb] == -1) continue;
                    for (int32_t x = la; x != -1; x = next[x])
                        for (int32_t y = b.head[1 - seq_a][cb]; y != -1; y = next[y])
                            emit_pair(nodes_[x].suffix_start, seq_a,
                                      nodes_[y].suffix_start, depth);
                }
            }
        }
    };

    auto splice = [&](LeafLists& dst, const LeafLists& src) {
        for (int s = 0; s < 2; ++s)
            for (int c = 0; c < kClasses; ++c) {
                if (src.head[s][c] == -1) continue;
                if (dst.head[s][c] == -1) {
                    dst.head[s][c] = src.head[s][c];
                    dst.tail[s][c] = src.tail[s][c];
                } else {
                    next[dst.tail[s][c]] = src.head[s][c];
                    dst.tail[s][c] = src.tail[s][c];
                }
            }
    };

    auto add_leaf = [&](LeafLists& dst, int32_t leaf, int64_t node_depth) {
        int seq, cls = 0;
        classify(nodes_[leaf].suffix_start, seq, cls);
        if (seq < 0) return;
        LeafLists single;
        single.head[seq][cls] = single.tail[seq][cls] = leaf;
        next[leaf] = -1;
        if (node_depth >= min_length) emit_cross(single, dst, node_depth);
        splice(dst, single);
    };

    struct Frame {
        int32_t node;
        int32_t child_idx;
        int64_t depth;
        LeafLists acc;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{root_, 0, 0, {}});
    while (!stack.empty()) {
        Frame& f = stack.back();
        int32_t ch = -1;
        while (f.child_idx < kAlphabet) {
            ch = nodes_[f.node].child[f.child_idx++];
            if (ch != -1) break;
            ch = -1;
        }
        if (ch != -1) {
            if (nodes_[ch].suffix_start >= 0) {
                add_leaf(f.acc, ch, f.depth);
            } else {
                stack.push_back(Frame{
                    ch, 0, f.depth + (nodes_[ch].end - nodes_[ch].start), {}});
            }
            continue;
        }
        // subtree finished: hand lists to the parent
        Frame done = std::move(stack.back());
        stack.pop_back();
        if (!stack.empty()) {
            Frame& parent = stack.back();
            if (parent.depth >= min_length)
                emit_cross(done.acc, parent.acc, parent.depth);
            splice(parent.acc, done.acc);
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int64_t GeneralizedSuffixTree::longest_common_match_length() const {
    // Deepest tree point with leaves from both sequences below it, with the
    // usable depth capped at the first N/sentinel on the path.
    struct Frame {
        int32_t node;
        int32_t child_idx;
        int64_t depth;
        int64_t valid_depth;  // depth up to the first special char on the path
        uint8_t mask = 0;     // bit0: seq1 leaf below, bit1: seq2 leaf below
    };
    int64_t best = 0;
    std::vector<Frame> stack;
    stack.push_back(Frame{root_, 0, 0, 0, 0});
    auto leaf_mask = [&](int32_t leaf) -> uint8_t {
        auto [seq, off] = locate(nodes_[leaf].suffix_start);
        (void)off;
        if (seq == 0) return 1;
        if (seq == 1) return 2;
        return 0;
    };
    while (!stack.empty()) {
        Frame& f = stack.back();
        int32_t ch = -1;
        while (f.child_idx < kAlphabet) {
            ch = nodes_[f.node].child[f.child_idx++];
            if (ch != -1) break;
            ch = -1;
        }
        if (ch != -1) {
            if (nodes_[ch].suffix_start >= 0) {
                f.mask |= leaf_mask(ch);
            } else {
                int64_t elen = nodes_[ch].end - nodes_[ch].start;
                int64_t vd = f.valid_depth;
                if (vd == f.depth) {  // path clean so far; scan this edge
                    int64_t sp = next_special_[nodes_[ch].start];
                    vd += std::min<int64_t>(sp - nodes_[ch].start, elen);
                }
                stack.push_back(Frame{ch, 0, f.depth + elen, vd, 0});
            }
            continue;
        }
        Frame done = stack.back();
        stack.pop_back();
        if ((done.mask & 3) == 3) best = std::max(best, done.valid_depth);
        if (!stack.empty()) stack.back().mask |= done.mask;
    }
    return best;
}

void GeneralizedSuffixTree::collect_leaf_positions(
    int32_t v, int64_t /*offset*/, int32_t mismatches,
    std::vector<Occurrence>& out) const {
    std::vector<int32_t> stack{v};
    while (!stack.empty()) {
        int32_t u = stack.back();
        stack.pop_back();
        if (nodes_[u].suffix_start >= 0) {
            out.push_back(Occurrence{nodes_[u].suffix_start, mismatches});
            continue;
        }
        for (int k = 0; k < kAlphabet; ++k)
            if (nodes_[u].child[k] != -1) stack.push_back(nodes_[u].child[k]);
    }
}

std::vector<GeneralizedSuffixTree::Occurrence>
GeneralizedSuffixTree::descend_with_mismatches(std::string_view query,
                                               int budget) const {
    std::vector<Occurrence> out;
    if (query.empty() || budget < 0) return out;
    const int64_t qlen = static_cast<int64_t>(query.size());
    std::vector<uint8_t> q(query.size());
    for (size_t i = 0; i < query.size(); ++i) q[i] = char_code(query[i]);

    struct State {
        int32_t node;    // node below the current edge
        int64_t qpos;    // query chars consumed at the TOP of this node's edge
        int32_t budget;  // budget remaining at the top of this node's edge
    };
    std::vector<State> stack;
    for (int k = 0; k < kAlphabet; ++k)
        if (nodes_[root_].child[k] != -1)
            stack.push_back(State{nodes_[root_].child[k], 0, budget});
    while (!stack.empty()) {
        State st = stack.back();
        stack.pop_back();
        const Node& nd = nodes_[st.node];
        int64_t qpos = st.qpos;
        int32_t left = st.budget;
        bool dead = false;
        for (int32_t i = nd.start; i < nd.end && qpos < qlen; ++i, ++qpos) {
            uint8_t tc = code_[i];
            if (tc >= 5) {  // sentinel: occurrence would straddle a boundary
                dead = true;
                break;
            }
            bool equal = tc == q[qpos] && tc != 4;  // N never matches
            if (!equal && --left < 0) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        if (qpos == qlen) {
            // every leaf below is one occurrence, starting at its suffix start
            collect_leaf_positions(st.node, 0, budget - left, out);
            continue;
        }
        for (int k = 0; k < kAlphabet; ++k)
            if (nd.child[k] != -1)
                stack.push_back(State{nd.child[k], qpos, left});
    }
    std::sort(out.begin(), out.end(),
              [](const Occurrence& a, const Occurrence& b) {
                  return a.text_pos < b.text_pos;
              });
    return out;
}

}  // namespace mmsaa
