#pragma once

namespace pathoverlap::terms {

// Reaction-type term ids used by the default rule tables and the shipped
// ontology fragment (fixtures/sbo_fragment.tsv).
inline constexpr const char* process = "SBO:0000375";
inline constexpr const char* conversion = "SBO:0000182";
inline constexpr const char* phosphorylation = "SBO:0000216";
inline constexpr const char* dephosphorylation = "SBO:0000330";
inline constexpr const char* ubiquitination = "SBO:0000224";
inline constexpr const char* deubiquitination = "GO:0016579";
inline constexpr const char* acetylation = "SBO:0000215";
inline constexpr const char* deacetylation = "GO:0006476";
inline constexpr const char* association = "SBO:0000177";
inline constexpr const char* dissociation = "SBO:0000180";
inline constexpr const char* localization = "GO:0051179";
inline constexpr const char* transport = "GO:0006810";
inline constexpr const char* gene_expression = "GO:0010467";
inline constexpr const char* transcription = "GO:0006351";
inline constexpr const char* translation = "GO:0006412";
inline constexpr const char* protein_catabolism = "GO:0030163";
inline constexpr const char* regulation = "GO:0065007";
inline constexpr const char* positive_regulation = "GO:0048518";
inline constexpr const char* negative_regulation = "GO:0048519";

} // namespace pathoverlap::terms
