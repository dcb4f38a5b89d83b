#ifndef MMSAA_SEQIO_HPP
#define MMSAA_SEQIO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mmsaa/types.hpp"

namespace mmsaa::seqio {

enum class OutputFormat { Text, Cigar, Tsv };

/// Parse FASTA text. Residues are folded to uppercase, 'U' to 'T'.
/// Throws Error{MalformedFasta} if residues precede any header and
/// Error{IllegalResidue} (message names the offset) on characters outside
/// {A,C,G,T,N,U}.
std::vector<Sequence> parse_fasta(std::string_view text);

/// Serialize sequences back to FASTA (60-column wrapped).
std::string emit_fasta(const std::vector<Sequence>& seqs);

/// Parse a 4-column TSV of (seq1_start, seq1_end, seq2_start, seq2_end)
/// half-open exon interval pairs. Output is sorted by seq1 start.
/// Throws Error{BadInterval} on empty or inverted intervals and
/// Error{OverlappingIntervals} if intervals overlap within either sequence.
ExonAnnotation parse_exon_annotation(std::string_view text);

/// Validate annotation coordinates against concrete sequence lengths.
void validate_annotation(const ExonAnnotation& ann, int64_t len1, int64_t len2);

/// Serialize an alignment. Text format needs the sequences to render
/// residue rows; Cigar and Tsv do not read them.
/// CIGAR ops: M match, X mismatch, I extra residue in seq1, D extra
/// residue in seq2.
std::string emit_alignment(const AlignmentRecord& rec, OutputFormat format,
                           const Sequence* s1 = nullptr,
                           const Sequence* s2 = nullptr);

/// Check the span/run-sum invariant; throws Error{BadArgument} on violation.
/// emit_alignment calls this on every record it accepts.
void check_record(const AlignmentRecord& rec);

}  // namespace mmsaa::seqio

#endif
