//! Deterministic synthetic corpora used by tests, benches and demos.

use crate::corpus::{Corpus, PublicationRecord};

fn build(records: Vec<PublicationRecord>) -> Corpus {
    Corpus::from_records(records)
        .expect("synthetic records are valid")
        .corpus
}

/// `main` coauthors one two-author publication with each of `n` distinct
/// partners `{main}-1 ..= {main}-n`.
pub fn star(main: &str, n: usize) -> Corpus {
    let mut recs: Vec<_> = (1..=n)
        .map(|i| PublicationRecord::new(&format!("star-{i:05}"), [main.to_string(), format!("{main}-{i}")], Vec::<&str>::new()))
        .collect();
    if recs.is_empty() {
        recs.push(PublicationRecord::new("star-solo", [main], Vec::<&str>::new()));
    }
    build(recs)
}

/// `chains` vertex-disjoint paths from `source` to `target`, each through
/// `intermediates` fresh authors named `c{chain}-{step}`.
pub fn disjoint_chains(source: &str, target: &str, chains: usize, intermediates: usize) -> Corpus {
    let mut recs = Vec::new();
    for c in 1..=chains {
        let mut nodes = vec![source.to_string()];
        nodes.extend((1..=intermediates).map(|s| format!("c{c}-{s}")));
        nodes.push(target.to_string());
        for (e, w) in nodes.windows(2).enumerate() {
            recs.push(PublicationRecord::new(
                &format!("chain-{c}-{e}"),
                [w[0].clone(), w[1].clone()],
                Vec::<&str>::new(),
            ));
        }
    }
    build(recs)
}

/// A path `names[0] – names[1] – ...` with one publication per edge.
pub fn chain(names: &[&str]) -> Corpus {
    let recs = if names.len() < 2 {
        names
            .iter()
            .map(|n| PublicationRecord::new(&format!("solo-{n}"), [*n], Vec::<&str>::new()))
            .collect()
    } else {
        names
            .windows(2)
            .enumerate()
            .map(|(i, w)| PublicationRecord::new(&format!("link-{i}"), [w[0], w[1]], Vec::<&str>::new()))
            .collect()
    };
    build(recs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let s = star("E", 3);
        assert_eq!(s.publication_count(), 3);
        assert_eq!(s.published().len(), 4);

        let d = disjoint_chains("s", "t", 5, 3);
        assert_eq!(d.publication_count(), 20);
        assert_eq!(d.published().len(), 17);

        assert_eq!(chain(&["a", "b", "c"]).publication_count(), 2);
        assert_eq!(chain(&["a"]).published().len(), 1);
    }
}
