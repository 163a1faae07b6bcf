//! Reference tables of `d_w` for paths and cycles, `j = 1..=n`, blanks as 0.
//! Cycle rows 1 and 2 are `K_1` and `K_2`.

pub const PATH_TABLE: [&[u64]; 10] = [
    &[1],
    &[2, 1],
    &[1, 3, 1],
    &[0, 3, 4, 1],
    &[0, 1, 6, 5, 1],
    &[0, 0, 4, 10, 6, 1],
    &[0, 0, 1, 10, 15, 7, 1],
    &[0, 0, 0, 5, 20, 21, 8, 1],
    &[0, 0, 0, 1, 15, 35, 28, 9, 1],
    &[0, 0, 0, 0, 6, 35, 56, 36, 10, 1],
];

pub const CYCLE_TABLE: [&[u64]; 14] = [
    &[1],
    &[2, 1],
    &[3, 3, 1],
    &[0, 6, 4, 1],
    &[0, 5, 10, 5, 1],
    &[0, 0, 14, 15, 6, 1],
    &[0, 0, 7, 28, 21, 7, 1],
    &[0, 0, 0, 26, 48, 28, 8, 1],
    &[0, 0, 0, 9, 63, 75, 36, 9, 1],
    &[0, 0, 0, 0, 42, 125, 110, 45, 10, 1],
    &[0, 0, 0, 0, 11, 121, 220, 154, 55, 11, 1],
    &[0, 0, 0, 0, 0, 62, 276, 357, 208, 66, 12, 1],
    &[0, 0, 0, 0, 0, 13, 208, 546, 546, 273, 78, 13, 1],
    &[0, 0, 0, 0, 0, 0, 86, 539, 980, 798, 350, 91, 14, 1],
];
