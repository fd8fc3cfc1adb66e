//! Keyword co-occurrence graphs from a corpus with one document per line.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, WeightedGraph};

/// A short English stop list.
pub const DEFAULT_STOPWORDS: &[&str] = &[
    "a", "an", "and", "are", "as", "at", "be", "by", "for", "from", "in", "into", "is", "it",
    "its", "of", "on", "or", "over", "that", "the", "their", "this", "to", "towards", "using",
    "via", "with", "without",
];

/// Lowercased whitespace tokens minus a stop list.
#[derive(Clone, Debug)]
pub struct Tokenizer {
    stopwords: HashSet<String>,
}

impl Default for Tokenizer {
    fn default() -> Self {
        Tokenizer::with_stopwords(DEFAULT_STOPWORDS.iter().copied())
    }
}

impl Tokenizer {
    pub fn with_stopwords<'a>(words: impl IntoIterator<Item = &'a str>) -> Self {
        Tokenizer {
            stopwords: words.into_iter().map(str::to_lowercase).collect(),
        }
    }

    pub fn without_stopwords() -> Self {
        Tokenizer {
            stopwords: HashSet::new(),
        }
    }

    /// Distinct tokens of one document, sorted. Tokens containing `#` are
    /// dropped since the edge-list format reads `#` as a comment.
    pub fn tokens(&self, doc: &str) -> BTreeSet<String> {
        doc.split_whitespace()
            .map(str::to_lowercase)
            .filter(|t| !t.contains('#') && !self.stopwords.contains(t))
            .collect()
    }
}

/// Weight of `{u, v}` is `100 * (documents containing both) / (documents)`.
/// Blank lines are not documents. Vertices appear in first-seen order and
/// only tokens that co-occur with something become vertices.
pub fn cooccurrence_graph<R: BufRead>(reader: R, tokenizer: &Tokenizer) -> Result<WeightedGraph> {
    let mut docs = 0usize;
    let mut order: Vec<String> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut counts: HashMap<(String, String), usize> = HashMap::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        docs += 1;
        let tokens: Vec<String> = tokenizer.tokens(&line).into_iter().collect();
        if tokens.len() < 2 {
            continue;
        }
        for t in line.split_whitespace().map(str::to_lowercase) {
            if tokens.binary_search(&t).is_ok() && seen.insert(t.clone()) {
                order.push(t);
            }
        }
        for (i, u) in tokens.iter().enumerate() {
            for v in &tokens[i + 1..] {
                *counts.entry((u.clone(), v.clone())).or_insert(0) += 1;
            }
        }
    }
    if docs == 0 {
        return Err(Error::EmptyCorpus);
    }

    let mut b = GraphBuilder::new();
    for t in &order {
        b.add_vertex(t);
    }
    let mut pairs: Vec<_> = counts.into_iter().collect();
    pairs.sort_unstable();
    for ((u, v), c) in pairs {
        b.add_edge(0, &u, &v, 100.0 * c as f64 / docs as f64)?;
    }
    Ok(b.build())
}
