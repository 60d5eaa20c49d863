//! Construction recipes read from JSON, for graphs that are not in the
//! named list.
//!
//! ```json
//! {"kind": "named", "name": "G66"}
//! {"kind": "cd", "m": 31, "root": 5}
//! {"kind": "cayley", "group": {"degree": 4, "generators": ["(0 1 2 3)"]}, "connection_set": ["(0 1 2 3)", "(0 3 2 1)"]}
//! {"kind": "coset", "group": {...}, "subgroup": {...}, "element": "(0 1)"}
//! {"kind": "presented", "presentation": "gens: a b; rels: a^2, b^5, (a b)^2", "connection_set": ["a", "b", "b^-1"]}
//! ```
//!
//! Permutations may be cycle strings or `{"degree": n, "images": [...]}`.

use serde::Deserialize;

use crate::config::Config;
use crate::error::{Error, ParseError, Result};
use crate::graph::named::{cd, presented_cayley};
use crate::graph::{cayley, coset_graph, named, NamedGraph};
use crate::perm::{PermGroup, Permutation};

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum PermSpec {
    Cycles(String),
    Images(Permutation),
}

impl PermSpec {
    pub fn resolve(&self, degree: usize) -> Result<Permutation> {
        let p = match self {
            PermSpec::Cycles(text) => Permutation::parse_cycles(text, Some(degree))?,
            PermSpec::Images(p) => p.clone(),
        };
        if p.degree() != degree {
            return Err(Error::DegreeMismatch(degree, p.degree()));
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<PermSpec>,
}

impl GroupSpec {
    /// Parses `{"degree": n, "generators": [...]}` with generators in either
    /// permutation form.
    pub fn parse(text: &str) -> Result<PermGroup> {
        let spec: GroupSpec = serde_json::from_str(text).map_err(|e| {
            Error::Parse(ParseError::new(e.column().saturating_sub(1), e.to_string()))
        })?;
        spec.resolve()
    }

    pub fn resolve(&self) -> Result<PermGroup> {
        if self.generators.is_empty() {
            return Ok(PermGroup::trivial(self.degree));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.resolve(self.degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(gens)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Recipe {
    Named {
        name: String,
    },
    Cd {
        m: u64,
        root: Option<u64>,
    },
    Cayley {
        group: GroupSpec,
        connection_set: Vec<PermSpec>,
    },
    Coset {
        group: GroupSpec,
        subgroup: GroupSpec,
        element: PermSpec,
    },
    Presented {
        presentation: String,
        connection_set: Vec<String>,
    },
}

impl Recipe {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse(ParseError::new(e.column().saturating_sub(1), e.to_string())))
    }

    pub fn build(&self, config: &Config) -> Result<NamedGraph> {
        match self {
            Recipe::Named { name } => named(name, config),
            Recipe::Cd { m, root } => cd(&format!("CD_{m}"), *m, *root),
            Recipe::Cayley {
                group,
                connection_set,
            } => {
                let g = group.resolve()?;
                let s = connection_set
                    .iter()
                    .map(|p| p.resolve(g.degree()))
                    .collect::<Result<Vec<_>>>()?;
                let c = cayley(&g, &s)?;
                Ok(
                    NamedGraph::new("cayley", c.graph, "Cayley graph from recipe")
                        .with_group(g, false),
                )
            }
            Recipe::Coset {
                group,
                subgroup,
                element,
            } => {
                let g = group.resolve()?;
                let h = subgroup.resolve()?;
                let d = element.resolve(g.degree())?;
                let c = coset_graph(&g, &h, &d)?;
                Ok(NamedGraph::new("coset", c.graph, "coset graph from recipe")
                    .with_group(c.action, true)
                    .note("group_order", g.order_u128())
                    .note("subgroup_order", h.order_u128()))
            }
            Recipe::Presented {
                presentation,
                connection_set,
            } => {
                let words: Vec<&str> = connection_set.iter().map(String::as_str).collect();
                presented_cayley("presented", presentation, &words, config)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(text: &str) -> Result<NamedGraph> {
        Recipe::parse(text)?.build(&Config::default())
    }

    #[test]
    fn cayley_cycle() {
        let g = build(
            r#"{"kind": "cayley", "group": {"degree": 5, "generators": ["(0 1 2 3 4)"]},
                "connection_set": ["(0 1 2 3 4)", "(0 4 3 2 1)"]}"#,
        )
        .unwrap();
        assert_eq!(g.graph.vertex_count(), 5);
        assert_eq!(g.graph.valency(), Some(2));
    }

    #[test]
    fn cd_and_named_agree() {
        let a = build(r#"{"kind": "cd", "m": 11}"#).unwrap();
        let b = build(r#"{"kind": "named", "name": "CD:11"}"#).unwrap();
        assert_eq!(a.graph.to_json(), b.graph.to_json());
        assert_eq!(b.name, "CD_11");
    }

    #[test]
    fn presented_dihedral() {
        let g = build(
            r#"{"kind": "presented", "presentation": "gens: a b; rels: a^2, b^5, (a b)^2",
                "connection_set": ["a", "a b"]}"#,
        )
        .unwrap();
        assert_eq!(g.graph.vertex_count(), 10);
        assert!(g.graph.is_connected());
    }

    #[test]
    fn coset_recipe_matches_petersen_order() {
        // S5 on 2-subsets gives the Petersen graph as Cos(S5, S2×S3, ...).
        let g = build(
            r#"{"kind": "coset",
                "group": {"degree": 5, "generators": ["(0 1 2 3 4)", "(0 1)"]},
                "subgroup": {"degree": 5, "generators": ["(0 1)", "(2 3 4)", "(2 3)"]},
                "element": "(0 2)(1 3)"}"#,
        )
        .unwrap();
        assert_eq!(g.graph.vertex_count(), 10);
        assert_eq!(g.graph.valency(), Some(3));
    }

    #[test]
    fn malformed_recipes_rejected() {
        assert!(build(r#"{"kind": "bogus"}"#).is_err());
        assert!(build(r#"{"kind": "cd"}"#).is_err());
        assert!(build(r#"{"kind": "named", "name": "nosuch"}"#).is_err());
        assert!(build(r#"{"kind": "cayley", "group": {"degree": 3, "generators": ["(0 5)"]}, "connection_set": []}"#).is_err());
    }
}
