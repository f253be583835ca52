use prasatul::{score_pair, ComparisonConfig, PrasatulMatrix, ScoreSet, TrialSet};
use proptest::prelude::*;

fn matrix(c: [[u64; 3]; 3]) -> PrasatulMatrix {
    PrasatulMatrix::from_counts(c).unwrap()
}

fn valid_counts(max: u64) -> impl Strategy<Value = [[u64; 3]; 3]> {
    prop::array::uniform3(prop::array::uniform3(0..=max)).prop_filter("n >= 1", |c| c.iter().flatten().sum::<u64>() > 0)
}

fn check_bounds(c: [[u64; 3]; 3]) -> Result<(), String> {
    let s = ScoreSet::from_matrix(&matrix(c));
    let ok = s.do_score > -1.0
        && s.do_score < 1.5
        && s.dc_score > -1.0
        && s.dc_score < 1.5
        && (-1.0..=1.0).contains(&s.ko)
        && (-1.0..=1.0).contains(&s.kc)
        && (0.0..=1.0).contains(&s.kt);
    if ok {
        Ok(())
    } else {
        Err(format!("bounds violated by {c:?}: {s:?}"))
    }
}

/// Every matrix with `n` counts spread over nine cells.
fn compositions(n: u64) -> Vec<[[u64; 3]; 3]> {
    fn go(left: u64, cell: usize, cur: &mut [u64; 9], out: &mut Vec<[[u64; 3]; 3]>) {
        if cell == 8 {
            cur[8] = left;
            out.push([
                [cur[0], cur[1], cur[2]],
                [cur[3], cur[4], cur[5]],
                [cur[6], cur[7], cur[8]],
            ]);
            return;
        }
        for v in 0..=left {
            cur[cell] = v;
            go(left - v, cell + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut [0; 9], &mut out);
    out
}

#[test]
fn bounds_hold_for_every_small_matrix() {
    for n in 1..=8 {
        for c in compositions(n) {
            check_bounds(c).unwrap();
        }
    }
}

#[test]
fn kt_times_n_is_the_upper_left_block() {
    for n in 1..=6 {
        for c in compositions(n) {
            let s = ScoreSet::from_matrix(&matrix(c));
            let block = c[0][0] + c[0][1] + c[1][0] + c[1][1];
            assert_eq!((s.kt * n as f64).round() as u64, block, "{c:?}");
            assert!((s.kt * n as f64 - block as f64).abs() < 1e-9);
        }
    }
}

#[test]
fn k_score_extremes_match_margins() {
    for n in 1..=6 {
        for c in compositions(n) {
            let m = matrix(c);
            let s = ScoreSet::from_matrix(&m);
            assert_eq!(s.ko == 1.0, m.col_total(0) == n, "{c:?}");
            assert_eq!(s.ko == -1.0, m.col_total(2) == n, "{c:?}");
            assert_eq!(s.kc == 1.0, m.row_total(0) == n, "{c:?}");
            assert_eq!(s.kc == -1.0, m.row_total(2) == n, "{c:?}");
        }
    }
}

fn promote(c: [[u64; 3]; 3]) -> [[u64; 3]; 3] {
    let mut d = c;
    d[2][2] -= 1;
    d[0][0] += 1;
    d
}

#[test]
fn moving_worst_lose_to_best_win_never_lowers_k_scores() {
    for n in 1..=7 {
        for c in compositions(n).into_iter().filter(|c| c[2][2] > 0) {
            let before = ScoreSet::from_matrix(&matrix(c));
            let after = ScoreSet::from_matrix(&matrix(promote(c)));
            assert!(after.ko >= before.ko, "{c:?}");
            assert!(after.kc >= before.kc, "{c:?}");
            assert!(after.kt >= before.kt, "{c:?}");
        }
    }
}

/// Both D-scores can drop: with Win-Worst and Lose-Best cells occupied,
/// shrinking the Worst column and Lose row raises O3 and C3 more than O1
/// and C1 grow.
#[test]
fn moving_worst_lose_to_best_win_can_lower_d_scores() {
    let c = [[10, 0, 5], [0, 0, 0], [5, 0, 1]];
    let before = ScoreSet::from_matrix(&matrix(c));
    let after = ScoreSet::from_matrix(&matrix(promote(c)));
    let expected_before = 10.0 / 16.0 - 5.0 / 7.0;
    let expected_after = 11.0 / 17.0 - 5.0 / 6.0;
    assert!((before.do_score - expected_before).abs() < 1e-12);
    assert!((after.do_score - expected_after).abs() < 1e-12);
    assert!((before.dc_score - expected_before).abs() < 1e-12);
    assert!((after.dc_score - expected_after).abs() < 1e-12);
    assert!(after.do_score < before.do_score);
    assert!(after.dc_score < before.dc_score);
}

proptest! {
    #[test]
    fn bounds_hold_for_random_matrices(c in valid_counts(200)) {
        prop_assert!(check_bounds(c).is_ok(), "{}", check_bounds(c).unwrap_err());
    }

    #[test]
    fn transposed_orientation_swaps_direct_and_overall_roles(c in valid_counts(30)) {
        let m = matrix(c);
        let s = ScoreSet::from_matrix(&m);
        let t = ScoreSet::from_matrix(&m.transposed());
        prop_assert_eq!(s.do_score, t.dc_score);
        prop_assert_eq!(s.dc_score, t.do_score);
        prop_assert_eq!(s.ko, t.kc);
        prop_assert_eq!(s.kc, t.ko);
        prop_assert_eq!(s.kt, t.kt);
    }

    #[test]
    fn scores_survive_positive_affine_maps(
        pool in prop::collection::vec((-400i32..400).prop_map(|k| f64::from(k) / 8.0), 1..5),
        picks in prop::collection::vec((0usize..16, 0usize..16), 1..30),
        s in prop::sample::select(vec![0.125, 0.5, 2.0, 8.0]),
        t in prop::sample::select(vec![-64.0, 0.0, 3.0, 4096.0]),
    ) {
        let p: Vec<f64> = picks.iter().map(|&(i, _)| pool[i % pool.len()]).collect();
        let q: Vec<f64> = picks.iter().map(|&(_, j)| pool[j % pool.len()]).collect();
        let map = |v: &[f64]| TrialSet::anonymous(v.iter().map(|x| s * x + t).collect()).unwrap();
        let cfg = ComparisonConfig::default();
        let plain = score_pair(&TrialSet::anonymous(p.clone()).unwrap(), &TrialSet::anonymous(q.clone()).unwrap(), &cfg).unwrap();
        let moved = score_pair(&map(&p), &map(&q), &cfg).unwrap();
        prop_assert_eq!(plain, moved);
    }
}
