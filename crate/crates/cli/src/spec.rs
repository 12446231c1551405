//! Textual group and set descriptions.
//!
//! Groups: `Z2024`, `Z4xZ2`. Sets: `{0,1,5}` (flat indices),
//! `{(1,0),(3,1)}` (coordinates), or `cosets(order=8; reps=0,1)` for the
//! union of cosets of the order-`k` subgroup of a cyclic group.

use shiftfree::{subgroup_generated, Error, Group, GroupSubset};
use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum ParseError {
    #[error("cannot parse group factor `{0}`; expected Z<order>, e.g. Z4xZ2")]
    GroupFactor(String),
    #[error("cannot parse set element `{0}`")]
    Element(String),
    #[error("malformed set `{0}`; expected {{..}} or cosets(order=k; reps=..)")]
    SetSyntax(String),
    #[error("coset form needs a cyclic group, got {0}")]
    NotCyclic(String),
    #[error("order {order} does not divide the group order {size}")]
    BadCosetOrder { order: usize, size: usize },
    #[error(transparent)]
    Group(#[from] Error),
}

pub fn parse_group(text: &str) -> Result<Group, ParseError> {
    let orders = text
        .split(['x', 'X'])
        .map(|tok| {
            let t = tok.trim();
            t.strip_prefix(['Z', 'z'])
                .and_then(|m| m.parse::<usize>().ok())
                .ok_or_else(|| ParseError::GroupFactor(t.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Group::new(&orders)?)
}

/// Canonical form: order-one factors dropped.
pub fn format_group(group: &Group) -> String {
    group.to_string()
}

pub fn parse_set(group: &Group, text: &str) -> Result<GroupSubset, ParseError> {
    let t = text.trim();
    if let Some(body) = t.strip_prefix("cosets(").and_then(|r| r.strip_suffix(')')) {
        return parse_cosets(group, body, t);
    }
    let body = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| ParseError::SetSyntax(t.to_string()))?;
    let mut indices = Vec::new();
    for tok in split_top_level(body) {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        indices.push(parse_element(group, tok)?);
    }
    Ok(GroupSubset::from_indices(group, indices)?)
}

fn parse_element(group: &Group, tok: &str) -> Result<usize, ParseError> {
    let bad = || ParseError::Element(tok.to_string());
    if let Some(inner) = tok.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let coords = inner
            .split(',')
            .map(|c| c.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        return group.flat_of(&coords).map_err(|_| bad());
    }
    let flat: usize = tok.parse().map_err(|_| bad())?;
    if flat >= group.size() {
        return Err(bad());
    }
    Ok(flat)
}

/// Splits on commas outside parentheses.
fn split_top_level(body: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&body[start..]);
    parts
}

fn parse_cosets(group: &Group, body: &str, whole: &str) -> Result<GroupSubset, ParseError> {
    let syntax = || ParseError::SetSyntax(whole.to_string());
    let mut order = None;
    let mut reps = None;
    for field in body.split(';') {
        let (key, value) = field.split_once('=').ok_or_else(syntax)?;
        match key.trim() {
            "order" => {
                let v = value.trim();
                order = Some(
                    v.parse::<usize>()
                        .map_err(|_| ParseError::Element(v.to_string()))?,
                );
            }
            "reps" => {
                reps = Some(
                    value
                        .split(',')
                        .map(|r| parse_element(group, r.trim()))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            _ => return Err(syntax()),
        }
    }
    let (order, reps) = (order.ok_or_else(syntax)?, reps.ok_or_else(syntax)?);
    if !group.is_cyclic_presentation() {
        return Err(ParseError::NotCyclic(group.to_string()));
    }
    let size = group.size();
    if order == 0 || size % order != 0 {
        return Err(ParseError::BadCosetOrder { order, size });
    }
    // in a cyclic presentation, flat index 1 generates the group
    let unit = if size > 1 { 1 } else { 0 };
    let step = group.element(unit * (size / order) % size)?;
    let h = subgroup_generated(group, &[step])?;
    let mut out = GroupSubset::empty(group);
    for r in reps {
        out = out.union(&h.as_subset().translate(&group.element(r)?)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups() {
        assert_eq!(parse_group("Z2024").unwrap().size(), 2024);
        let g = parse_group("Z4xZ2").unwrap();
        assert_eq!(g.orders(), Some(&[4, 2][..]));
        assert_eq!(parse_group(" Z4 x Z2 ").unwrap(), g);
        assert_eq!(format_group(&parse_group("Z1xZ6").unwrap()), "Z6");
        for canon in ["Z2024", "Z4xZ2", "Z2xZ2xZ3", "Z1"] {
            assert_eq!(format_group(&parse_group(canon).unwrap()), canon);
        }
        assert_eq!(
            parse_group("Z4xQ2"),
            Err(ParseError::GroupFactor("Q2".into()))
        );
        assert!(matches!(parse_group("Z0"), Err(ParseError::Group(_))));
    }

    #[test]
    fn explicit_sets() {
        let g = parse_group("Z6").unwrap();
        assert_eq!(parse_set(&g, "{0, 1,5}").unwrap().indices(), [0, 1, 5]);
        assert!(parse_set(&g, "{}").unwrap().is_empty());
        assert_eq!(parse_set(&g, "{0,6}"), Err(ParseError::Element("6".into())));
        assert_eq!(parse_set(&g, "{0,a}"), Err(ParseError::Element("a".into())));
        assert!(matches!(
            parse_set(&g, "0,1"),
            Err(ParseError::SetSyntax(_))
        ));

        let g = parse_group("Z4xZ2").unwrap();
        assert_eq!(
            parse_set(&g, "{(1,1), (0,0), 2}").unwrap().indices(),
            [0, 2, 5]
        );
        assert_eq!(
            parse_set(&g, "{(4,0)}"),
            Err(ParseError::Element("(4,0)".into()))
        );
    }

    #[test]
    fn coset_sets() {
        let g = parse_group("Z2024").unwrap();
        let s = parse_set(&g, "cosets(order=8; reps=0,1)").unwrap();
        assert_eq!(s.len(), 16);
        assert!(s.contains(253) && s.contains(254) && !s.contains(2));
        let z4 = parse_group("Z4xZ2").unwrap();
        assert!(matches!(
            parse_set(&z4, "cosets(order=2; reps=0)"),
            Err(ParseError::NotCyclic(_))
        ));
        assert!(matches!(
            parse_set(&g, "cosets(order=7; reps=0)"),
            Err(ParseError::BadCosetOrder { .. })
        ));
        let g = parse_group("Z1xZ12").unwrap();
        assert_eq!(
            parse_set(&g, "cosets(order=3; reps=1)").unwrap().indices(),
            [1, 5, 9]
        );
    }
}
