use super::Multigraph;
use crate::error::{Error, Result};

/// Names shipped with the library; `cycle-k` and `chain-k` also resolve for
/// any other `k`.
const BUILTIN: &[&str] = &[
    "empty",
    "point",
    "node",
    "pair-of-lines",
    "banana",
    "triangle",
    "theta",
    "chain-3",
    "cycle-4",
    "cycle-5",
    "elliptic",
    "banana-g1",
    "triangle-g2",
];

pub fn catalog_names() -> &'static [&'static str] {
    BUILTIN
}

/// Looks up a built-in graph by name.
pub fn catalog(name: &str) -> Result<Multigraph> {
    let unknown = || Error::UnknownCatalogGraph(name.to_string());
    let g = match name {
        "empty" => Multigraph::empty(),
        "point" => Multigraph::from_index_edges(1, &[]),
        "node" => cycle(1),
        "pair-of-lines" => chain(2),
        "banana" => cycle(2),
        "triangle" => cycle(3),
        "theta" => Multigraph::from_index_edges(2, &[(0, 1), (0, 1), (0, 1)]),
        "elliptic" => Multigraph::from_index_edges(1, &[]).with_genera(&[1]),
        "banana-g1" => cycle(2).with_genera(&[1, 1]),
        "triangle-g2" => cycle(3).with_genera(&[2, 0, 0]),
        _ => {
            let (family, k) = name.rsplit_once('-').ok_or_else(unknown)?;
            let k: usize = k.parse().map_err(|_| unknown())?;
            match family {
                "cycle" if (1..=64).contains(&k) => cycle(k),
                "chain" if (1..=64).contains(&k) => chain(k),
                _ => return Err(unknown()),
            }
        }
    };
    Ok(g)
}

/// `k` rational components glued cyclically; `cycle-1` is the nodal cubic.
fn cycle(k: usize) -> Multigraph {
    let pairs: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Multigraph::from_index_edges(k, &pairs)
}

/// `k` rational components in a row, consecutive ones meeting once.
fn chain(k: usize) -> Multigraph {
    let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    Multigraph::from_index_edges(k, &pairs)
}

/// Named graphs: the built-ins plus user graphs.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<(String, Multigraph)>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Self {
            entries: BUILTIN
                .iter()
                .map(|&n| (n.to_string(), catalog(n).expect("builtin names resolve")))
                .collect(),
        }
    }

    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn insert(&mut self, name: impl Into<String>, graph: Multigraph) -> Result<()> {
        let name = name.into();
        if self.get(&name).is_some() {
            return Err(Error::DuplicateCatalogName(name));
        }
        self.entries.push((name, graph));
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Multigraph> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Multigraph)> {
        self.entries.iter().map(|(n, g)| (n.as_str(), g))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let banana = catalog("banana").unwrap();
        assert_eq!((banana.vertex_count(), banana.edge_count()), (2, 2));
        assert_eq!(catalog("node").unwrap().first_betti(), 1);
        assert_eq!(catalog("cycle-7").unwrap().edge_count(), 7);
        let chain = catalog("chain-4").unwrap();
        assert!(chain.is_connected());
        assert_eq!(chain.first_betti(), 0);
        assert_eq!(catalog("triangle-g2").unwrap().total_genus(), 2);
    }

    #[test]
    fn unknown_names() {
        for bad in ["cycle-0", "cycle-x", "wheel-3", "nope"] {
            assert!(matches!(catalog(bad), Err(Error::UnknownCatalogGraph(_))), "{bad}");
        }
    }

    #[test]
    fn builtin_names_unique() {
        let c = Catalog::builtin();
        let mut names: Vec<&str> = c.iter().map(|(n, _)| n).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }
}
