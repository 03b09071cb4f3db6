//! Fixtures shared by the benchmarks.

use scholarnet_core::{CitationBag, Corpus, PublicationId, PublicationRecord};

/// A `width × height` lattice of authors; each grid edge is a two-author
/// publication and every publication cites its left neighbour's.
pub fn lattice(width: usize, height: usize) -> Corpus {
    let name = |x: usize, y: usize| format!("g{x:03}-{y:03}");
    let mut recs = Vec::new();
    for y in 0..height {
        for x in 0..width {
            if x + 1 < width {
                let cites: Vec<String> = if x > 0 { vec![format!("h{}-{y}", x - 1)] } else { vec![] };
                recs.push(PublicationRecord::new(&format!("h{x}-{y}"), [name(x, y), name(x + 1, y)], cites));
            }
            if y + 1 < height {
                recs.push(PublicationRecord::new(&format!("v{x}-{y}"), [name(x, y), name(x, y + 1)], Vec::<&str>::new()));
            }
        }
    }
    Corpus::from_records(recs).expect("lattice is valid").corpus
}

pub fn lattice_corner() -> scholarnet_core::AuthorId {
    scholarnet_core::AuthorId::new("g000-000")
}

/// `n` publications with a heavy-tailed, deterministic citation profile.
pub fn skewed_bag(n: usize) -> CitationBag {
    (0..n)
        .map(|i| (PublicationId::new(format!("p{i}")), (10_000 / (i as u64 + 1)).max(1)))
        .collect()
}
