#ifndef MMSAA_SUFFIX_TREE_HPP
#define MMSAA_SUFFIX_TREE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmsaa/types.hpp"

namespace mmsaa {

/// Generalized suffix tree over two sequences, built online with Ukkonen's
/// algorithm. The joined text is S1 + SEP1 + S2 + SEP2 where the sentinels
/// are bytes outside the residue alphabet, so no suffix of S1 can be a
/// prefix of a suffix reaching into S2.
///
/// Construction is single-threaded; the built tree is immutable and safe to
/// query from any number of threads.
class GeneralizedSuffixTree {
public:
    static constexpr char kSep1 = '\x01';
    static constexpr char kSep2 = '\x02';

    GeneralizedSuffixTree(std::string_view s1, std::string_view s2);

    int64_t s1_size() const { return len1_; }
    int64_t s2_size() const { return len2_; }
    const std::string& text() const { return text_; }

    /// All maximal exact match pairs (MEMs) between S1 and S2 of length at
    /// least min_length. A pair is maximal when neither slice can be grown
    /// left or right without a mismatch or a boundary; 'N' mismatches every
    /// character including 'N'. Result is sorted by (pos1, pos2, length).
    std::vector<Match> enumerate_mmss(int64_t min_length = 1) const;

    /// Length of the longest exact match between S1 and S2 ('N'-free);
    /// 0 when the sequences share nothing.
    int64_t longest_common_match_length() const;

    struct Occurrence {
        int64_t text_pos;   // start in the joined text
        int32_t mismatches;
    };

    /// All |query|-length slices of the joined text within Hamming distance
    /// `budget` of the query, found by budgeted depth-first descent. No gaps
    /// are inserted; sentinels terminate a branch; 'N' on either side costs
    /// one mismatch.
    std::vector<Occurrence> descend_with_mismatches(std::string_view query,
                                                    int budget) const;

    /// Map a joined-text position to (sequence index 0/1, offset within it);
    /// sequence index -1 for sentinel positions.
    std::pair<int, int64_t> locate(int64_t text_pos) const;

    // --- structural introspection (validity tests) ---
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int root() const { return root_; }
    bool is_leaf(int v) const { return nodes_[v].suffix_start >= 0; }
    std::vector<int> children_of(int v) const;
    int suffix_link_of(int v) const { return nodes_[v].link; }
    std::string_view edge_label(int v) const;
    int64_t leaf_count() const;
    /// Concatenated edge labels of every root-to-leaf path (test-scale only).
    std::vector<std::string> root_to_leaf_paths() const;

private:
    static constexpr int32_t kLeafEnd = INT32_MAX;
    static constexpr int kAlphabet = 7;  // A C G T N SEP1 SEP2

    struct Node {
        int32_t start = 0;
        int32_t end = 0;  // exclusive; kLeafEnd while building
        int32_t link = -1;
        int32_t suffix_start = -1;  // >= 0 iff leaf
        std::array<int32_t, kAlphabet> child;
    };

    int32_t new_node(int32_t start, int32_t end);
    int32_t edge_length(int32_t v, int32_t pos) const;
    void extend(int32_t pos);
    void add_suffix_link(int32_t v);
    void finalize();
    void collect_leaf_positions(int32_t v, int64_t offset, int32_t mismatches,
                                std::vector<Occurrence>& out) const;

    std::string text_;            // joined text with sentinel bytes
    std::vector<uint8_t> code_;   // per-char alphabet codes 0..6
    std::vector<int32_t> next_special_;  // next index with code >= 4
    int64_t len1_ = 0, len2_ = 0;

    std::vector<Node> nodes_;
    int32_t root_ = 0;
    // Ukkonen active point (construction only)
    int32_t active_node_ = 0, active_edge_ = 0, active_length_ = 0;
    int32_t remainder_ = 0, need_sl_ = -1;
};

}  // namespace mmsaa

#endif
