use std::fmt;
use std::str::FromStr;

use super::GraphError;

/// One of the graph families handled by the toolkit.
///
/// Text form (the CLI mini-language): `cycle:7`, `line:5`, `bicyclic:4,5`,
/// `dumbbell:3,1,4`, `union:cycle:4+line:2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// Path on `n >= 1` vertices.
    Line(usize),
    /// Cycles of lengths `m` (x-block) and `n` (y-block) sharing `x1 = y1`.
    BicyclicVertex { m: usize, n: usize },
    /// Cycles of lengths `m` and `n` joined by a path `x1 z1 .. zk y1`;
    /// `k = 0` is the bridge edge `x1 y1`.
    Dumbbell { m: usize, k: usize, n: usize },
    /// Disjoint union; the right operand is relabelled into fresh blocks.
    Union(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::Parameter(msg));
        match *self {
            FamilySpec::Cycle(n) if n < 3 => bad(format!("cycle length {n} < 3")),
            FamilySpec::Line(n) if n < 1 => bad("line needs at least one vertex".into()),
            FamilySpec::BicyclicVertex { m, n } if m < 3 || n < 3 => {
                bad(format!("bicyclic cycle lengths ({m},{n}) must be >= 3"))
            }
            FamilySpec::Dumbbell { m, n, .. } if m < 3 || n < 3 => {
                bad(format!("dumbbell cycle lengths ({m},{n}) must be >= 3"))
            }
            FamilySpec::Union(ref a, ref b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Cycle(n) | FamilySpec::Line(n) => *n,
            FamilySpec::BicyclicVertex { m, n } => m + n - 1,
            FamilySpec::Dumbbell { m, k, n } => m + n + k,
            FamilySpec::Union(a, b) => a.vertex_count() + b.vertex_count(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Line(n) => write!(f, "line:{n}"),
            FamilySpec::BicyclicVertex { m, n } => write!(f, "bicyclic:{m},{n}"),
            FamilySpec::Dumbbell { m, k, n } => write!(f, "dumbbell:{m},{k},{n}"),
            FamilySpec::Union(a, b) => {
                write!(f, "union:")?;
                // left-nested unions flatten to `union:a+b+c`
                match a.as_ref() {
                    FamilySpec::Union(..) => {
                        let inner = a.to_string();
                        write!(f, "{}", &inner["union:".len()..])?;
                    }
                    other => write!(f, "{other}")?,
                }
                write!(f, "+{b}")
            }
        }
    }
}

fn parse_ints(family: &str, args: &str, want: usize) -> Result<Vec<usize>, GraphError> {
    let vals: Result<Vec<usize>, _> = args.split(',').map(|s| s.trim().parse::<usize>()).collect();
    match vals {
        Ok(v) if v.len() == want => Ok(v),
        _ => Err(GraphError::Syntax(format!(
            "{family} expects {want} comma-separated integer(s), got {args:?}"
        ))),
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (family, args) = s
            .split_once(':')
            .ok_or_else(|| GraphError::Syntax(format!("missing ':' in {s:?}")))?;
        let spec = match family {
            "cycle" => FamilySpec::Cycle(parse_ints(family, args, 1)?[0]),
            "line" => FamilySpec::Line(parse_ints(family, args, 1)?[0]),
            "bicyclic" => {
                let v = parse_ints(family, args, 2)?;
                FamilySpec::BicyclicVertex { m: v[0], n: v[1] }
            }
            "dumbbell" => {
                let v = parse_ints(family, args, 3)?;
                FamilySpec::Dumbbell {
                    m: v[0],
                    k: v[1],
                    n: v[2],
                }
            }
            "union" => {
                let parts: Vec<&str> = args.split('+').collect();
                if parts.len() < 2 {
                    return Err(GraphError::Syntax(format!(
                        "union needs at least two '+'-separated specs, got {args:?}"
                    )));
                }
                let mut acc = parts[0].parse::<FamilySpec>()?;
                for p in &parts[1..] {
                    acc = FamilySpec::Union(Box::new(acc), Box::new(p.parse()?));
                }
                acc
            }
            other => return Err(GraphError::Syntax(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}
