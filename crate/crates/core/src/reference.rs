//! Published Chern-Mather and conormal rows for small determinantal varieties,
//! used by the verification suite.

/// `(m, n, k)` and one row of values.
pub type Row = ((usize, usize, usize), &'static [i64]);

/// `(m, n, k)` and `beta_0 .. beta_{mn-1}`.
pub const CHERN_MATHER: &[Row] = &[
    ((3, 3, 0), &[9, 36, 84, 126, 126, 84, 36, 9, 1]),
    ((3, 3, 1), &[18, 54, 102, 126, 102, 54, 18, 3, 0]),
    ((3, 3, 2), &[9, 18, 24, 18, 6, 0, 0, 0, 0]),
    (
        (4, 3, 0),
        &[12, 66, 220, 495, 792, 924, 792, 495, 220, 66, 12, 1],
    ),
    (
        (4, 3, 1),
        &[24, 96, 248, 444, 564, 514, 336, 153, 44, 6, 0, 0],
    ),
    ((4, 3, 2), &[12, 30, 52, 57, 36, 10, 0, 0, 0, 0, 0, 0]),
    (
        (4, 4, 1),
        &[
            48, 288, 1128, 3168, 6672, 10816, 13716, 13716, 10816, 6672, 3168, 1128, 288, 48, 4, 0,
        ],
    ),
    (
        (4, 4, 2),
        &[
            48, 216, 672, 1524, 2592, 3368, 3376, 2602, 1504, 616, 160, 20, 0, 0, 0, 0,
        ],
    ),
    (
        (4, 4, 3),
        &[16, 48, 104, 152, 144, 80, 20, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    ),
];

/// `(m, n, k)` and `|con_j|` for `j = 1..=mn-1`.
pub const CONORMAL: &[Row] = &[
    (
        (4, 4, 1),
        &[0, 0, 0, 0, 0, 0, 0, 0, 20, 60, 84, 68, 36, 12, 4],
    ),
    (
        (4, 4, 2),
        &[0, 0, 0, 20, 80, 176, 256, 286, 256, 176, 80, 20, 0, 0, 0],
    ),
    (
        (4, 4, 3),
        &[4, 12, 36, 68, 84, 60, 20, 0, 0, 0, 0, 0, 0, 0, 0],
    ),
    (
        (5, 4, 1),
        &[
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 35, 120, 190, 176, 105, 40, 10, 0,
        ],
    ),
    (
        (5, 4, 2),
        &[
            0, 0, 0, 0, 0, 50, 240, 595, 960, 1116, 960, 595, 240, 50, 0, 0, 0, 0, 0,
        ],
    ),
    (
        (5, 4, 3),
        &[
            0, 10, 40, 105, 176, 190, 120, 35, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
        ],
    ),
];
