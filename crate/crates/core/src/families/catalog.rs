//! Static description of the classification: families, table rows and the
//! known inconsistencies of the source formulas.

use serde::Serialize;

use super::spec::Variant;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FamilyEntry {
    #[serde(rename = "type")]
    pub family: u8,
    pub variant: Variant,
    pub params: &'static [&'static str],
    pub product: &'static str,
    pub u: &'static str,
    pub v: &'static str,
    pub poles: &'static str,
}

pub const FAMILIES: [FamilyEntry; 10] = [
    FamilyEntry {
        family: 1,
        variant: Variant::Single,
        params: &["a", "u0", "c", "v0"],
        product: "(x,0,u(x)) * (0,y,v(y))",
        u: "a x + u0",
        v: "c[(a+y)sqrt(1+(a+y)^2) + asinh(a+y)] + v0",
        poles: "none",
    },
    FamilyEntry {
        family: 2,
        variant: Variant::I,
        params: &["a", "b", "c", "d"],
        product: "(x,0,u(x)) * (v(y),y,0)",
        u: "a/(2(1+a^2)) x^2 + b x + c",
        v: "a y + d (minimal only for d = 0)",
        poles: "none",
    },
    FamilyEntry {
        family: 2,
        variant: Variant::Ii,
        params: &["a", "u0", "b", "c"],
        product: "(x,0,u(x)) * (v(y),y,0)",
        u: "a x + u0",
        v: "b/(2a+y) + c[(a+y)sqrt(1+(a+y)^2) + asinh(a+y)]/(2(2a+y))",
        poles: "y = -2a",
    },
    FamilyEntry {
        family: 3,
        variant: Variant::I,
        params: &["a", "b", "c", "d"],
        product: "(0,x,u(x)) * (y,v(y),0)",
        u: "a/(2(1+a^2)) x^2 + b x + c",
        v: "-a y + d (minimal only for d = 0)",
        poles: "none",
    },
    FamilyEntry {
        family: 3,
        variant: Variant::Ii,
        params: &["a", "b", "c", "u0"],
        product: "(0,x,u(x)) * (y,v(y),0)",
        u: "a x + u0",
        v: "b/(2a-y) + c[(a-y)sqrt(1+(a-y)^2) + asinh(a-y)]/(2(2a-y))",
        poles: "y = 2a",
    },
    FamilyEntry {
        family: 4,
        variant: Variant::Single,
        params: &["a", "c", "u0", "v0"],
        product: "(0,y,v(y)) * (x,0,u(x))",
        u: "c[(a+x)sqrt(1+(a+x)^2) + asinh(a+x)] + u0",
        v: "-a y + v0",
        poles: "none",
    },
    FamilyEntry {
        family: 5,
        variant: Variant::I,
        params: &["u0", "a", "b"],
        product: "(v(y),y,0) * (x,0,u(x))",
        u: "u0",
        v: "a/y + b",
        poles: "y = 0",
    },
    FamilyEntry {
        family: 5,
        variant: Variant::Ii,
        params: &["a", "b", "c", "c1"],
        product: "(v(y),y,0) * (x,0,u(x))",
        u: "-(a x^2 + a b x + c)/(2(1+a^2)) + c1(x/2 + b/4)R + c1(1+a^2) ln(2x + b + R), R = sqrt(4(1+a^2) + (2x+b)^2)",
        v: "a y + b",
        poles: "none",
    },
    FamilyEntry {
        family: 6,
        variant: Variant::I,
        params: &["u0", "a", "b"],
        product: "(y,v(y),0) * (0,x,u(x))",
        u: "u0",
        v: "a/y + b",
        poles: "y = 0",
    },
    FamilyEntry {
        family: 6,
        variant: Variant::Ii,
        params: &["a", "b", "c", "c1"],
        product: "(y,v(y),0) * (0,x,u(x))",
        u: "+(a x^2 + a b x + c)/(2(1+a^2)) + c1(x/2 + b/4)R + c1(1+a^2) ln(2x + b + R), R as in type 5",
        v: "a y + b",
        poles: "none",
    },
];

/// A point where the printed classification disagrees with itself or with
/// direct computation, and how the library resolves it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InconsistencyFlag {
    pub id: &'static str,
    pub issue: &'static str,
    pub resolution: &'static str,
}

pub const FLAGS: [InconsistencyFlag; 5] = [
    InconsistencyFlag {
        id: "type3-display",
        issue: "the displayed type-3 parametrization (x,0,u(x))*(v(y),y,0) repeats the type-2 product",
        resolution: "default is the construction (0,x,u(x))*(y,v(y),0) = (y, x+v, u-xy/2); \
                     the verifier records which of the two is minimal",
    },
    InconsistencyFlag {
        id: "d-zero",
        issue: "types 2(i) and 3(i) list v = +-ay + d with d free, but the minimality equation forces d = 0",
        resolution: "d is accepted, defaults to 0, and a warning is emitted when d != 0",
    },
    InconsistencyFlag {
        id: "type6-sign",
        issue: "the type-6 u(x) carries the opposite sign on its quadratic block relative to type 5",
        resolution: "both signs are available; the default is the one the verifier finds minimal (as printed)",
    },
    InconsistencyFlag {
        id: "flatness",
        issue: "types 1-4 are remarked to be flat, yet the type-1 member z = xy/2 has K = -1/(1+y^2)^2",
        resolution: "curvature is measured and reported; flatness is not assumed",
    },
    InconsistencyFlag {
        id: "type1-intermediate",
        issue: "an intermediate type-1 equation reads u''(1+c^2) - c(u(x)+y) = 0 where u'(x) is meant",
        resolution: "no implemented formula depends on it; the conclusion u'' = 0, c = 0 holds either way",
    },
];
