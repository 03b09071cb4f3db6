//! Community-of-Practice tiers around the main author.
//!
//! Direct coauthors of the main author are *editorial* members, authors
//! reachable through transitive coauthorship are *active*, and together with
//! the main author they form the *core*. Authors citing anyone in the core
//! are *peripheral*; every other published author is an *outsider*.

use std::collections::BTreeSet;
use std::fmt;
use std::num::NonZeroUsize;

use serde::{Deserialize, Serialize};

use crate::collab::Researchers;
use crate::corpus::AuthorId;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopPartition {
    pub main: AuthorId,
    pub editorial: BTreeSet<AuthorId>,
    pub active: BTreeSet<AuthorId>,
    pub core: BTreeSet<AuthorId>,
    pub peripheral: BTreeSet<AuthorId>,
    pub cop: BTreeSet<AuthorId>,
    pub outsiders: BTreeSet<AuthorId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    Main,
    Editorial,
    Active,
    Peripheral,
    Outsider,
}

impl Tier {
    pub const ALL: [Tier; 5] = [
        Tier::Main,
        Tier::Editorial,
        Tier::Active,
        Tier::Peripheral,
        Tier::Outsider,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Tier::Main => "main",
            Tier::Editorial => "editorial",
            Tier::Active => "active",
            Tier::Peripheral => "peripheral",
            Tier::Outsider => "outsiders",
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl CopPartition {
    /// Members of one of the five disjoint tiers.
    pub fn members(&self, tier: Tier) -> BTreeSet<AuthorId> {
        match tier {
            Tier::Main => BTreeSet::from([self.main.clone()]),
            Tier::Editorial => self.editorial.clone(),
            Tier::Active => self.active.clone(),
            Tier::Peripheral => self.peripheral.clone(),
            Tier::Outsider => self.outsiders.clone(),
        }
    }

    pub fn tier_of(&self, a: &AuthorId) -> Option<Tier> {
        if *a == self.main {
            Some(Tier::Main)
        } else if self.editorial.contains(a) {
            Some(Tier::Editorial)
        } else if self.active.contains(a) {
            Some(Tier::Active)
        } else if self.peripheral.contains(a) {
            Some(Tier::Peripheral)
        } else if self.outsiders.contains(a) {
            Some(Tier::Outsider)
        } else {
            None
        }
    }
}

pub fn classify(r: &Researchers) -> CopPartition {
    let main = BTreeSet::from([r.main().clone()]);
    let active = r.related().image(&main);
    partition(r, active)
}

/// Like [`classify`], but active members must lie within `max_dist`
/// coauthor edges of the main author.
pub fn classify_with_radius(r: &Researchers, max_dist: NonZeroUsize) -> CopPartition {
    let within = r.bfs_depths_bounded(r.main(), max_dist.get());
    let main = BTreeSet::from([r.main().clone()]);
    let active = r
        .related()
        .image(&main)
        .into_iter()
        .filter(|a| within.contains_key(a))
        .collect();
    partition(r, active)
}

fn partition(r: &Researchers, related_to_main: BTreeSet<AuthorId>) -> CopPartition {
    let main_set = BTreeSet::from([r.main().clone()]);
    let editorial = r.coauthors().relation().image(&main_set);
    let active: BTreeSet<_> = related_to_main.difference(&editorial).cloned().collect();

    let mut core = main_set;
    core.extend(editorial.iter().cloned());
    core.extend(active.iter().cloned());

    let peripheral: BTreeSet<_> = r.citing_authors().image(&core).difference(&core).cloned().collect();
    let cop: BTreeSet<_> = core.union(&peripheral).cloned().collect();
    let outsiders = r.published().difference(&cop).cloned().collect();

    CopPartition {
        main: r.main().clone(),
        editorial,
        active,
        core,
        peripheral,
        cop,
        outsiders,
    }
}
