//! Rank-frequency statistics over the normalized token stream.

use std::collections::HashMap;

use crate::textproc::TokenizedDoc;

/// One row of the rank-frequency table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZipfEntry {
    pub token: String,
    pub rank: usize,
    pub frequency: u64,
}

/// Token frequencies over `norm_tokens`, sorted by descending frequency
/// with lexicographic tie-breaks, ranked from 1.
pub fn zipf_stats(docs: &[TokenizedDoc]) -> Vec<ZipfEntry> {
    let mut counts: HashMap<&str, u64> = HashMap::new();
    for doc in docs {
        for token in &doc.norm_tokens {
            *counts.entry(token).or_insert(0) += 1;
        }
    }
    let mut entries: Vec<(&str, u64)> = counts.into_iter().collect();
    entries.sort_by(|(wa, fa), (wb, fb)| fb.cmp(fa).then_with(|| wa.cmp(wb)));
    entries
        .into_iter()
        .enumerate()
        .map(|(i, (token, frequency))| ZipfEntry {
            token: token.to_string(),
            rank: i + 1,
            frequency,
        })
        .collect()
}

/// Render as CSV with the `token,rank,frequency` header.
pub fn zipf_csv(entries: &[ZipfEntry]) -> String {
    let mut out = String::from("token,rank,frequency\n");
    for e in entries {
        out.push_str(&format!("{},{},{}\n", e.token, e.rank, e.frequency));
    }
    out
}
