use super::Dosp;
use crate::error::SieveError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpotColor {
    Red,
    Blue,
}

/// The circle of `k` spots with blocks placed on it, clockwise from spot 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpotDiagram {
    occupancy: Vec<Option<usize>>,
    block_spots: Vec<usize>,
}

impl SpotDiagram {
    /// Block `i` sits at spot `l_0 + ... + l_{i-1}`.
    pub fn from_gaps(gaps: &[usize]) -> Self {
        let k: usize = gaps.iter().sum();
        let mut occupancy = vec![None; k];
        let mut block_spots = Vec::with_capacity(gaps.len());
        let mut spot = 0;
        for (i, &g) in gaps.iter().enumerate() {
            occupancy[spot] = Some(i);
            block_spots.push(spot);
            spot += g;
        }
        SpotDiagram {
            occupancy,
            block_spots,
        }
    }

    pub fn k(&self) -> usize {
        self.occupancy.len()
    }

    pub fn occupant(&self, spot: usize) -> Option<usize> {
        self.occupancy[spot % self.k()]
    }

    pub fn block_spot(&self, block: usize) -> usize {
        self.block_spots[block]
    }

    pub fn occupied_count(&self) -> usize {
        self.occupancy.iter().filter(|o| o.is_some()).count()
    }

    /// Clockwise distances between consecutive occupied spots.
    pub fn gaps(&self) -> Vec<usize> {
        let occupied: Vec<usize> = (0..self.k())
            .filter(|&s| self.occupancy[s].is_some())
            .collect();
        let m = occupied.len();
        (0..m)
            .map(|i| {
                if m == 1 {
                    self.k()
                } else {
                    (occupied[(i + 1) % m] + self.k() - occupied[i]) % self.k()
                }
            })
            .collect()
    }

    /// Red/blue colouring relative to `(t, r)`: each T-singlet spot and the
    /// `r - 1` empty spots after it are red, everything else blue.
    ///
    /// Fails if an element of `t` is not alone in its block, or if a T-singlet
    /// is followed by fewer than `r - 1` empty spots.
    pub fn color(&self, dosp: &Dosp, r: usize, t: &[usize]) -> Result<Vec<SpotColor>, SieveError> {
        let mut colors = vec![SpotColor::Blue; self.k()];
        let block_of = dosp.block_index();
        for &element in t {
            let b = block_of[element];
            if dosp.blocks()[b].len() != 1 {
                return Err(SieveError::NotSinglet(element));
            }
            let gap = dosp.gaps()[b];
            if gap < r {
                return Err(SieveError::InsufficientGap { element, gap, r });
            }
            let spot = self.block_spots[b];
            for offset in 0..r {
                colors[(spot + offset) % self.k()] = SpotColor::Red;
            }
        }
        Ok(colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn three_block_spots() {
        let p = Dosp::parse("({1,2,7}_2,{3,5}_3,{4,6}_1)", 6, 7).unwrap();
        let d = p.spot_diagram();
        assert_eq!(d.k(), 6);
        assert_eq!(d.occupied_count(), 3);
        assert_eq!(d.block_spot(1), 2);
        assert_eq!(d.block_spot(2), 5);
        assert_eq!(d.occupant(0), Some(0));
        assert_eq!(d.occupant(1), None);
        assert_eq!(d.occupant(6), Some(0));
        assert_eq!(d.gaps(), vec![2, 3, 1]);
    }

    #[test]
    fn coloring_second_winding_example() {
        let p = Dosp::parse(
            "({2}_2,{1}_2,{5,6}_1,{7,8}_1,{9}_3,{11,12,13}_1,{10,14}_1,{3,4}_1)",
            12,
            14,
        )
        .unwrap();
        let colors = p.spot_diagram().color(&p, 2, &[1, 2, 9]).unwrap();
        let red = colors.iter().filter(|&&c| c == SpotColor::Red).count();
        assert_eq!(red, 6);
        // canonical order starts at {1}: spots 0,1 red; {9} at 4; {2} at 10
        let reds: Vec<usize> = (0..12).filter(|&s| colors[s] == SpotColor::Red).collect();
        assert_eq!(reds, vec![0, 1, 4, 5, 10, 11]);
    }

    #[test]
    fn coloring_rejects_non_members() {
        let p = Dosp::parse("({1,2}_2,{3}_1)", 3, 3).unwrap();
        let d = p.spot_diagram();
        assert_eq!(d.color(&p, 1, &[1]), Err(SieveError::NotSinglet(1)));
        assert_eq!(
            d.color(&p, 2, &[3]),
            Err(SieveError::InsufficientGap {
                element: 3,
                gap: 1,
                r: 2
            })
        );
    }

    proptest! {
        #[test]
        fn gaps_round_trip(gaps in proptest::collection::vec(1usize..6, 1..7)) {
            prop_assert_eq!(SpotDiagram::from_gaps(&gaps).gaps(), gaps);
        }
    }
}
