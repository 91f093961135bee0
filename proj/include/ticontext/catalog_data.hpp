#pragma once

// Generated from data/catalog.json; keep both in sync (checked by test_functionals).

namespace ticontext::detail {

inline constexpr const char* kCatalogJson = R"CATALOG({
 "catalog_version": "1.0.0",
 "functionals": [
  {
   "id": "222/1",
   "scenario": "222",
   "couplings": {
    "Jx": 2,
    "Jy": 0,
    "Jxx": 1,
    "Jxy": 1,
    "Jyx": -1,
    "Jyy": -1
   },
   "classical_bound": -2,
   "reference": {
    "ltins": {
     "3": "-8/3",
     "4": "-12/5",
     "5": "-9/4",
     "6": "-13/6",
     "7": "-36/17",
     "8": "-48/23",
     "9": "-62/30"
    },
    "quantum": [
     {
      "d": 2,
      "Q": -2.0,
      "w": [
       1e-05
      ],
      "signature": [
       1,
       1
      ],
      "ground_state": 1
     },
     {
      "d": 3,
      "Q": -2.0,
      "w": [
       0.65129
      ],
      "signature": [
       2,
       2
      ],
      "ground_state": 2
     },
     {
      "d": 4,
      "Q": -2.0,
      "w": [
       4e-05,
       0.59946
      ],
      "signature": [
       2,
       2
      ],
      "ground_state": 3
     },
     {
      "d": 5,
      "Q": -2.0,
      "w": [
       0.98662,
       1e-05
      ],
      "signature": [
       2,
       2
      ],
      "ground_state": 4
     },
     {
      "d": 6,
      "Q": -2.0,
      "w": [
       0.90451,
       0.91913,
       5e-05
      ],
      "signature": [
       3,
       3
      ],
      "ground_state": 5
     }
    ]
   }
  },
  {
   "id": "322/1",
   "scenario": "322",
   "couplings": {
    "Jx": -6,
    "Jy": 0,
    "Jxx": 2,
    "Jxy": 3,
    "Jyx": 3,
    "Jyy": -2,
    "JACxx": 3,
    "JACxy": -1,
    "JACyx": -1,
    "JACyy": 1
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -6.08108,
      "w": [
       1.2472
      ],
      "signature": [
       1,
       1
      ],
      "D": 7
     },
     {
      "d": 3,
      "Q": -6.32747,
      "w": [
       0.7811
      ],
      "signature": [
       1,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -6.32747,
    "npa_matched_d": 3
   }
  },
  {
   "id": "322/2",
   "scenario": "322",
   "couplings": {
    "Jx": -4,
    "Jy": 2,
    "Jxx": 2,
    "Jxy": 2,
    "Jyx": 2,
    "Jyy": -4,
    "JACxx": 1,
    "JACxy": -1,
    "JACyx": -1,
    "JACyy": 3
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -6.10943,
      "w": [
       1.2224
      ],
      "signature": [
       1,
       1
      ],
      "D": 7
     },
     {
      "d": 3,
      "Q": -6.33712,
      "w": [
       0.9117
      ],
      "signature": [
       1,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -6.33712,
    "npa_matched_d": 3
   }
  },
  {
   "id": "322/3",
   "scenario": "322",
   "couplings": {
    "Jx": -3,
    "Jy": 1,
    "Jxx": 1,
    "Jxy": 1,
    "Jyx": 1,
    "Jyy": -1,
    "JACxx": 1,
    "JACxy": 0,
    "JACyx": -1,
    "JACyy": 1
   },
   "classical_bound": -3,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -3.0415,
      "w": [
       1.2508
      ],
      "signature": [
       1,
       1
      ],
      "D": 8
     },
     {
      "d": 3,
      "Q": -3.20711,
      "w": [
       0.7852
      ],
      "signature": [
       1,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -3.20711,
    "npa_matched_d": 3
   }
  },
  {
   "id": "322/4",
   "scenario": "322",
   "couplings": {
    "Jx": -2,
    "Jy": -2,
    "Jxx": -2,
    "Jxy": 1,
    "Jyx": -1,
    "Jyy": -2,
    "JACxx": 1,
    "JACxy": 0,
    "JACyx": 2,
    "JACyy": 1
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -4.14623,
      "w": [
       0.7925
      ],
      "signature": [
       1,
       1
      ],
      "D": 5
     }
    ],
    "npa_5_1": -4.14623,
    "npa_matched_d": 3
   }
  },
  {
   "id": "322/5",
   "scenario": "322",
   "couplings": {
    "Jx": -11,
    "Jy": 1,
    "Jxx": 5,
    "Jxy": 2,
    "Jyx": 2,
    "Jyy": -1,
    "JACxx": 4,
    "JACxy": -1,
    "JACyx": -2,
    "JACyy": 1
   },
   "classical_bound": -8,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -8.12123,
      "w": [
       0.6735
      ],
      "signature": [
       1,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -8.12123,
    "npa_matched_d": 3
   }
  },
  {
   "id": "322/6",
   "scenario": "322",
   "couplings": {
    "Jx": -3,
    "Jy": -3,
    "Jxx": 2,
    "Jxy": 2,
    "Jyx": -1,
    "Jyy": 2,
    "JACxx": 1,
    "JACxy": 1,
    "JACyx": -1,
    "JACyy": 0
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -4.02415,
      "w": [
       0.3641
      ],
      "signature": [
       1,
       1
      ],
      "D": 16
     },
     {
      "d": 4,
      "Q": -4.1031,
      "w": [
       -0.0,
       0.7031
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -4.1031,
    "npa_matched_d": 4
   }
  },
  {
   "id": "322/7",
   "scenario": "322",
   "couplings": {
    "Jx": -3,
    "Jy": -3,
    "Jxx": 2,
    "Jxy": 2,
    "Jyx": 2,
    "Jyy": -3,
    "JACxx": 1,
    "JACxy": 0,
    "JACyx": -1,
    "JACyy": 2
   },
   "classical_bound": -5,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -5.09951,
      "w": [
       1.1158
      ],
      "signature": [
       1,
       1
      ],
      "D": 12
     },
     {
      "d": 4,
      "Q": -5.09951,
      "w": [
       0.0,
       -1.1156
      ],
      "signature": [
       2,
       2
      ],
      "D": 12
     },
     {
      "d": 5,
      "Q": -5.29852,
      "w": [
       1.5704,
       0.8509
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -5.29852,
    "npa_matched_d": 5
   }
  },
  {
   "id": "322/8",
   "scenario": "322",
   "couplings": {
    "Jx": -2,
    "Jy": -4,
    "Jxx": -2,
    "Jxy": 2,
    "Jyx": 2,
    "Jyy": 2,
    "JACxx": 1,
    "JACxy": 0,
    "JACyx": 0,
    "JACyy": 1
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -4.18655,
      "w": [
       0.9483
      ],
      "signature": [
       1,
       1
      ],
      "D": 14
     },
     {
      "d": 4,
      "Q": -4.18655,
      "w": [
       -0.9483,
       0.0
      ],
      "signature": [
       2,
       2
      ],
      "D": 14
     },
     {
      "d": 5,
      "Q": -4.33137,
      "w": [
       1.5699,
       0.7854
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -4.33137,
    "npa_matched_d": 5
   }
  },
  {
   "id": "322/9",
   "scenario": "322",
   "couplings": {
    "Jx": 0,
    "Jy": -4,
    "Jxx": 2,
    "Jxy": 2,
    "Jyx": -2,
    "Jyy": 2,
    "JACxx": 0,
    "JACxy": 1,
    "JACyx": -1,
    "JACyy": 0
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -4.11581,
      "w": [
       1.1034
      ],
      "signature": [
       1,
       1
      ],
      "D": 14
     },
     {
      "d": 4,
      "Q": -4.11581,
      "w": [
       0.4671,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 15
     },
     {
      "d": 5,
      "Q": -4.41421,
      "w": [
       0.7854,
       1.5702
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -4.41421,
    "npa_matched_d": 5
   }
  },
  {
   "id": "322/10",
   "scenario": "322",
   "couplings": {
    "Jx": -2,
    "Jy": 2,
    "Jxx": 2,
    "Jxy": -2,
    "Jyx": -2,
    "Jyy": -4,
    "JACxx": 1,
    "JACxy": 1,
    "JACyx": 1,
    "JACyy": 2
   },
   "classical_bound": -5,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -5.07058,
      "w": [
       0.3947
      ],
      "signature": [
       1,
       2
      ],
      "D": 12
     },
     {
      "d": 4,
      "Q": -5.07058,
      "w": [
       0.3948,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 12
     },
     {
      "d": 5,
      "Q": -5.26969,
      "w": [
       1.5708,
       0.659
      ],
      "signature": [
       3,
       3
      ],
      "D": 6
     }
    ],
    "npa_5_1": -5.26969,
    "npa_matched_d": 5
   }
  },
  {
   "id": "322/11",
   "scenario": "322",
   "couplings": {
    "Jx": -1,
    "Jy": 1,
    "Jxx": 2,
    "Jxy": -1,
    "Jyx": -1,
    "Jyy": -2,
    "JACxx": 1,
    "JACxy": 1,
    "JACyx": 0,
    "JACyy": 1
   },
   "classical_bound": -3,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -3.00628,
      "w": [
       0.354
      ],
      "signature": [
       1,
       2
      ],
      "D": 8
     },
     {
      "d": 4,
      "Q": -3.00628,
      "w": [
       0.3533,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 8
     },
     {
      "d": 5,
      "Q": -3.11696,
      "w": [
       0.7857,
       1.5704
      ],
      "signature": [
       3,
       3
      ],
      "D": 6
     }
    ],
    "npa_5_1": -3.11698
   }
  },
  {
   "id": "322/12",
   "scenario": "322",
   "couplings": {
    "Jx": -2,
    "Jy": -6,
    "Jxx": -2,
    "Jxy": 4,
    "Jyx": 3,
    "Jyy": 3,
    "JACxx": 1,
    "JACxy": -1,
    "JACyx": 0,
    "JACyy": 2
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -6.06459,
      "w": [
       0.4885
      ],
      "signature": [
       1,
       1
      ],
      "D": 14
     },
     {
      "d": 4,
      "Q": -6.20259,
      "w": [
       0.0,
       0.7
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -6.20261
   }
  },
  {
   "id": "322/13",
   "scenario": "322",
   "couplings": {
    "Jx": 6,
    "Jy": -8,
    "Jxx": 4,
    "Jxy": 2,
    "Jyx": -8,
    "Jyy": 5,
    "JACxx": -2,
    "JACxy": 1,
    "JACyx": -7,
    "JACyy": 0
   },
   "classical_bound": -11,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -11.19018,
      "w": [
       -1.5708,
       -2.2493
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -11.19036
   }
  },
  {
   "id": "322/14",
   "scenario": "322",
   "couplings": {
    "Jx": 8,
    "Jy": -12,
    "Jxx": 5,
    "Jxy": 2,
    "Jyx": -12,
    "Jyy": 7,
    "JACxx": -4,
    "JACxy": 1,
    "JACyx": -11,
    "JACyy": 0
   },
   "classical_bound": -16,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -16.17635,
      "w": [
       0.8977,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -16.17654
   }
  },
  {
   "id": "322/15",
   "scenario": "322",
   "couplings": {
    "Jx": 3,
    "Jy": -5,
    "Jxx": 2,
    "Jxy": 1,
    "Jyx": -4,
    "Jyy": 3,
    "JACxx": -1,
    "JACxy": 1,
    "JACyx": -3,
    "JACyy": 1
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -6.09323,
      "w": [
       1.5708,
       0.8916
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -6.09347
   }
  },
  {
   "id": "322/16",
   "scenario": "322",
   "couplings": {
    "Jx": -6,
    "Jy": 4,
    "Jxx": 4,
    "Jxy": 2,
    "Jyx": -4,
    "Jyy": 3,
    "JACxx": 0,
    "JACxy": 1,
    "JACyx": -3,
    "JACyy": 0
   },
   "classical_bound": -7,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -7.21677,
      "w": [
       1.5708,
       0.8683
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -7.21747
   }
  },
  {
   "id": "322/17",
   "scenario": "322",
   "couplings": {
    "Jx": -12,
    "Jy": 6,
    "Jxx": 7,
    "Jxy": 2,
    "Jyx": -10,
    "Jyy": 4,
    "JACxx": 0,
    "JACxy": 1,
    "JACyx": -9,
    "JACyy": -3
   },
   "classical_bound": -14,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -14.18216,
      "w": [
       -1.5708,
       2.2462
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -14.18291
   }
  },
  {
   "id": "322/18",
   "scenario": "322",
   "couplings": {
    "Jx": -8,
    "Jy": 4,
    "Jxx": 5,
    "Jxy": 2,
    "Jyx": -6,
    "Jyy": 3,
    "JACxx": 0,
    "JACxy": 1,
    "JACyx": -5,
    "JACyy": -1
   },
   "classical_bound": -9,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -9.20253,
      "w": [
       1.5708,
       0.8852
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -9.20406
   }
  },
  {
   "id": "322/19",
   "scenario": "322",
   "couplings": {
    "Jx": -4,
    "Jy": -12,
    "Jxx": -4,
    "Jxy": 6,
    "Jyx": 6,
    "Jyy": 6,
    "JACxx": 1,
    "JACxy": -1,
    "JACyx": -1,
    "JACyy": 4
   },
   "classical_bound": -11,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -11.40483,
      "w": [
       0.6551
      ],
      "signature": [
       1,
       1
      ],
      "D": 14
     },
     {
      "d": 4,
      "Q": -11.47642,
      "w": [
       0.0,
       -0.7229
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -11.47839
   }
  },
  {
   "id": "322/20",
   "scenario": "322",
   "couplings": {
    "Jx": -1,
    "Jy": -5,
    "Jxx": -1,
    "Jxy": 2,
    "Jyx": 2,
    "Jyy": 2,
    "JACxx": 0,
    "JACxy": 0,
    "JACyx": -1,
    "JACyy": 2
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -4.00682,
      "w": [
       1.217
      ],
      "signature": [
       1,
       1
      ],
      "D": 4
     },
     {
      "d": 3,
      "Q": -4.02137,
      "w": [
       0.4173
      ],
      "signature": [
       1,
       1
      ],
      "D": 16
     },
     {
      "d": 4,
      "Q": -4.12887,
      "w": [
       1.5708,
       0.703
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -4.13251
   }
  },
  {
   "id": "322/21",
   "scenario": "322",
   "couplings": {
    "Jx": -3,
    "Jy": 1,
    "Jxx": 3,
    "Jxy": -2,
    "Jyx": -2,
    "Jyy": -1,
    "JACxx": 2,
    "JACxy": 1,
    "JACyx": 0,
    "JACyy": 1
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -4.06491,
      "w": [
       1.5708,
       0.9817
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -4.0689
   }
  },
  {
   "id": "322/22",
   "scenario": "322",
   "couplings": {
    "Jx": -6,
    "Jy": 0,
    "Jxx": 2,
    "Jxy": 2,
    "Jyx": 1,
    "Jyy": -2,
    "JACxx": 2,
    "JACxy": 0,
    "JACyx": -1,
    "JACyy": 1
   },
   "classical_bound": -5,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -5.00062,
      "w": [
       1.3959
      ],
      "signature": [
       1,
       1
      ],
      "D": 4
     },
     {
      "d": 3,
      "Q": -5.12457,
      "w": [
       0.7855
      ],
      "signature": [
       1,
       2
      ],
      "D": 5
     },
     {
      "d": 4,
      "Q": -5.12457,
      "w": [
       1.5708,
       0.7854
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -5.12887
   }
  },
  {
   "id": "322/23",
   "scenario": "322",
   "couplings": {
    "Jx": -8,
    "Jy": 2,
    "Jxx": 4,
    "Jxy": -4,
    "Jyx": -4,
    "Jyy": -4,
    "JACxx": 3,
    "JACxy": 1,
    "JACyx": 1,
    "JACyy": 1
   },
   "classical_bound": -8,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -8.01053,
      "w": [
       0.2887
      ],
      "signature": [
       1,
       1
      ],
      "D": 5
     },
     {
      "d": 3,
      "Q": -8.13694,
      "w": [
       0.6619
      ],
      "signature": [
       1,
       1
      ],
      "D": 5
     },
     {
      "d": 4,
      "Q": -8.13694,
      "w": [
       0.0,
       0.6618
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -8.14126
   }
  },
  {
   "id": "322/24",
   "scenario": "322",
   "couplings": {
    "Jx": -5,
    "Jy": -5,
    "Jxx": 2,
    "Jxy": 3,
    "Jyx": 2,
    "Jyy": -4,
    "JACxx": 1,
    "JACxy": 1,
    "JACyx": -1,
    "JACyy": 3
   },
   "classical_bound": -7,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -7.11178,
      "w": [
       1.1
      ],
      "signature": [
       1,
       1
      ],
      "D": 12
     },
     {
      "d": 4,
      "Q": -7.11178,
      "w": [
       0.0,
       1.1002
      ],
      "signature": [
       2,
       2
      ],
      "D": 12
     },
     {
      "d": 5,
      "Q": -7.25367,
      "w": [
       0.8707,
       1.5704
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -7.25827
   }
  },
  {
   "id": "322/25",
   "scenario": "322",
   "couplings": {
    "Jx": -3,
    "Jy": -7,
    "Jxx": -2,
    "Jxy": 4,
    "Jyx": 5,
    "Jyy": 4,
    "JACxx": 2,
    "JACxy": 0,
    "JACyx": -2,
    "JACyy": 3
   },
   "classical_bound": -8,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -8.00096,
      "w": [
       0.163
      ],
      "signature": [
       1,
       1
      ],
      "D": 16
     },
     {
      "d": 4,
      "Q": -8.14914,
      "w": [
       0.0,
       0.6379
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -8.15428
   }
  },
  {
   "id": "322/26",
   "scenario": "322",
   "couplings": {
    "Jx": 2,
    "Jy": -4,
    "Jxx": 1,
    "Jxy": 1,
    "Jyx": -3,
    "Jyy": 2,
    "JACxx": -1,
    "JACxy": 0,
    "JACyx": -2,
    "JACyy": 0
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -4.078,
      "w": [
       1.5708,
       1.0105
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     },
     {
      "d": 5,
      "Q": -4.14354,
      "w": [
       0.8877,
       1.5707
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -4.14877
   }
  },
  {
   "id": "322/27",
   "scenario": "322",
   "couplings": {
    "Jx": -2,
    "Jy": -2,
    "Jxx": 2,
    "Jxy": 2,
    "Jyx": -1,
    "Jyy": 1,
    "JACxx": 0,
    "JACxy": 1,
    "JACyx": 0,
    "JACyy": 0
   },
   "classical_bound": -3,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -3.11927,
      "w": [
       0.8353
      ],
      "signature": [
       1,
       1
      ],
      "D": 8
     },
     {
      "d": 4,
      "Q": -3.11932,
      "w": [
       0.0,
       0.7027
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     },
     {
      "d": 5,
      "Q": -3.14915,
      "w": [
       0.7027,
       1.5694
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -3.1547
   }
  },
  {
   "id": "322/28",
   "scenario": "322",
   "couplings": {
    "Jx": -2,
    "Jy": 0,
    "Jxx": 1,
    "Jxy": 2,
    "Jyx": 1,
    "Jyy": -2,
    "JACxx": 1,
    "JACxy": -1,
    "JACyx": 0,
    "JACyy": 1
   },
   "classical_bound": -3,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -3.0403,
      "w": [
       1.2555
      ],
      "signature": [
       1,
       1
      ],
      "D": 7
     },
     {
      "d": 3,
      "Q": -3.14915,
      "w": [
       0.8685
      ],
      "signature": [
       1,
       2
      ],
      "D": 5
     },
     {
      "d": 4,
      "Q": -3.14915,
      "w": [
       0.8682,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -3.1547
   }
  },
  {
   "id": "322/29",
   "scenario": "322",
   "couplings": {
    "Jx": -4,
    "Jy": 2,
    "Jxx": 2,
    "Jxy": -1,
    "Jyx": -2,
    "Jyy": -2,
    "JACxx": 1,
    "JACxy": 0,
    "JACyx": -1,
    "JACyy": 1
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -4.00935,
      "w": [
       1.3742,
       0.3202
      ],
      "signature": [
       2,
       2
      ],
      "D": 12
     },
     {
      "d": 5,
      "Q": -4.09966,
      "w": [
       1.5708,
       0.786
      ],
      "signature": [
       3,
       3
      ],
      "D": 7
     }
    ],
    "npa_5_1": -4.10571
   }
  },
  {
   "id": "322/30",
   "scenario": "322",
   "couplings": {
    "Jx": -1,
    "Jy": -5,
    "Jxx": 1,
    "Jxy": 2,
    "Jyx": -1,
    "Jyy": 3,
    "JACxx": 0,
    "JACxy": 1,
    "JACyx": -1,
    "JACyy": 1
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -4.03262,
      "w": [
       0.3966
      ],
      "signature": [
       1,
       1
      ],
      "D": 19
     },
     {
      "d": 4,
      "Q": -4.11218,
      "w": [
       0.0,
       0.7054
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     },
     {
      "d": 5,
      "Q": -4.14023,
      "w": [
       0.7054,
       1.5699
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -4.14877
   }
  },
  {
   "id": "322/31",
   "scenario": "322",
   "couplings": {
    "Jx": -6,
    "Jy": -6,
    "Jxx": 3,
    "Jxy": 6,
    "Jyx": -2,
    "Jyy": 3,
    "JACxx": -1,
    "JACxy": 3,
    "JACyx": 1,
    "JACyy": -1
   },
   "classical_bound": -8,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -8.22037,
      "w": [
       0.0,
       0.6827
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -8.23071
   }
  },
  {
   "id": "322/32",
   "scenario": "322",
   "couplings": {
    "Jx": -3,
    "Jy": 3,
    "Jxx": -5,
    "Jxy": 3,
    "Jyx": 2,
    "Jyy": 2,
    "JACxx": 4,
    "JACxy": -1,
    "JACyx": -1,
    "JACyy": 1
   },
   "classical_bound": -7,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -7.08653,
      "w": [
       1.2383
      ],
      "signature": null,
      "D": 6
     },
     {
      "d": 3,
      "Q": -7.25928,
      "w": [
       0.9558
      ],
      "signature": [
       1,
       2
      ],
      "D": 5
     },
     {
      "d": 4,
      "Q": -7.25928,
      "w": [
       0.9558,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -7.27038
   }
  },
  {
   "id": "322/33",
   "scenario": "322",
   "couplings": {
    "Jx": -1,
    "Jy": -3,
    "Jxx": -1,
    "Jxy": 2,
    "Jyx": 1,
    "Jyy": 2,
    "JACxx": 0,
    "JACxy": 0,
    "JACyx": 0,
    "JACyy": 1
   },
   "classical_bound": -3,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -3.11932,
      "w": [
       0.7018
      ],
      "signature": [
       1,
       1
      ],
      "D": 6
     },
     {
      "d": 4,
      "Q": -3.11932,
      "w": [
       0.0,
       0.7026
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -3.13058
   }
  },
  {
   "id": "322/34",
   "scenario": "322",
   "couplings": {
    "Jx": -4,
    "Jy": -4,
    "Jxx": 2,
    "Jxy": 5,
    "Jyx": -1,
    "Jyy": 2,
    "JACxx": -1,
    "JACxy": 4,
    "JACyx": 0,
    "JACyy": -1
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -6.03951,
      "w": [
       0.0,
       0.4637
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -6.05216
   }
  },
  {
   "id": "322/35",
   "scenario": "322",
   "couplings": {
    "Jx": -4,
    "Jy": -6,
    "Jxx": -3,
    "Jxy": 3,
    "Jyx": 2,
    "Jyy": 2,
    "JACxx": 2,
    "JACxy": 1,
    "JACyx": 0,
    "JACyy": 1
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -6.19072,
      "w": [
       0.9694
      ],
      "signature": [
       1,
       1
      ],
      "D": 14
     },
     {
      "d": 4,
      "Q": -6.19072,
      "w": [
       0.0,
       0.97
      ],
      "signature": [
       2,
       2
      ],
      "D": 14
     },
     {
      "d": 5,
      "Q": -6.26479,
      "w": [
       0.8478,
       1.5702
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -6.27801
   }
  },
  {
   "id": "322/36",
   "scenario": "322",
   "couplings": {
    "Jx": -4,
    "Jy": -4,
    "Jxx": 2,
    "Jxy": 5,
    "Jyx": -1,
    "Jyy": 2,
    "JACxx": -1,
    "JACxy": 3,
    "JACyx": 1,
    "JACyy": -1
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -6.03951,
      "w": [
       0.0,
       0.4637
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -6.05327
   }
  },
  {
   "id": "322/37",
   "scenario": "322",
   "couplings": {
    "Jx": -4,
    "Jy": 4,
    "Jxx": 3,
    "Jxy": 2,
    "Jyx": -3,
    "Jyy": 4,
    "JACxx": 0,
    "JACxy": 1,
    "JACyx": -2,
    "JACyy": 1
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -6.17482,
      "w": [
       1.5708,
       0.8827
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -6.18885
   }
  },
  {
   "id": "322/38",
   "scenario": "322",
   "couplings": {
    "Jx": -4,
    "Jy": 0,
    "Jxx": 1,
    "Jxy": 2,
    "Jyx": 2,
    "Jyy": -1,
    "JACxx": 2,
    "JACxy": -1,
    "JACyx": -1,
    "JACyy": 0
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -4.03281,
      "w": [
       1.2745
      ],
      "signature": [
       1,
       1
      ],
      "D": 8
     },
     {
      "d": 3,
      "Q": -4.14623,
      "w": [
       0.7767
      ],
      "signature": [
       1,
       2
      ],
      "D": 5
     },
     {
      "d": 4,
      "Q": -4.14623,
      "w": [
       1.5708,
       0.7775
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -4.16445
   }
  },
  {
   "id": "322/39",
   "scenario": "322",
   "couplings": {
    "Jx": -3,
    "Jy": 1,
    "Jxx": -4,
    "Jxy": 2,
    "Jyx": 1,
    "Jyy": 1,
    "JACxx": 3,
    "JACxy": -1,
    "JACyx": -1,
    "JACyy": 0
   },
   "classical_bound": -5,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -5.06166,
      "w": [
       1.9574
      ],
      "signature": [
       1,
       1
      ],
      "D": 7
     },
     {
      "d": 3,
      "Q": -5.12466,
      "w": [
       0.9504
      ],
      "signature": [
       1,
       2
      ],
      "D": 7
     },
     {
      "d": 4,
      "Q": -5.12466,
      "w": [
       1.5708,
       0.9503
      ],
      "signature": [
       2,
       2
      ],
      "D": 7
     }
    ],
    "npa_5_1": -5.14311
   }
  },
  {
   "id": "322/40",
   "scenario": "322",
   "couplings": {
    "Jx": -1,
    "Jy": 1,
    "Jxx": -3,
    "Jxy": 2,
    "Jyx": 2,
    "Jyy": 1,
    "JACxx": 2,
    "JACxy": 0,
    "JACyx": -1,
    "JACyy": 1
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -4.02193,
      "w": [
       1.3015
      ],
      "signature": [
       1,
       1
      ],
      "D": 5
     },
     {
      "d": 3,
      "Q": -4.06591,
      "w": [
       1.0457
      ],
      "signature": [
       1,
       2
      ],
      "D": 5
     },
     {
      "d": 4,
      "Q": -4.06591,
      "w": [
       1.0459,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -4.08498
   }
  },
  {
   "id": "322/41",
   "scenario": "322",
   "couplings": {
    "Jx": 5,
    "Jy": -3,
    "Jxx": 4,
    "Jxy": 9,
    "Jyx": 7,
    "Jyy": -9,
    "JACxx": 5,
    "JACxy": -5,
    "JACyx": 2,
    "JACyy": 6
   },
   "classical_bound": -15,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -15.0115,
      "w": [
       1.36
      ],
      "signature": [
       1,
       1
      ],
      "D": 5
     },
     {
      "d": 3,
      "Q": -15.0115,
      "w": [
       1.7814
      ],
      "signature": [
       1,
       1
      ],
      "D": 5
     },
     {
      "d": 4,
      "Q": -15.13717,
      "w": [
       4.1651,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -15.15803
   }
  },
  {
   "id": "322/42",
   "scenario": "322",
   "couplings": {
    "Jx": -1,
    "Jy": -5,
    "Jxx": -1,
    "Jxy": 3,
    "Jyx": 1,
    "Jyy": 4,
    "JACxx": 0,
    "JACxy": 0,
    "JACyx": -1,
    "JACyy": 3
   },
   "classical_bound": -5,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -5.01755,
      "w": [
       0.7989,
       0.0884
      ],
      "signature": [
       2,
       2
      ],
      "D": 16
     },
     {
      "d": 5,
      "Q": -5.04311,
      "w": [
       0.2159,
       0.7668
      ],
      "signature": [
       2,
       2
      ],
      "D": 12
     }
    ],
    "npa_5_1": -5.064
   }
  },
  {
   "id": "322/43",
   "scenario": "322",
   "couplings": {
    "Jx": 2,
    "Jy": 0,
    "Jxx": -5,
    "Jxy": 3,
    "Jyx": 3,
    "Jyy": 1,
    "JACxx": 3,
    "JACxy": -1,
    "JACyx": -1,
    "JACyy": 1
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -6.01649,
      "w": [
       1.817
      ],
      "signature": [
       1,
       1
      ],
      "D": 5
     },
     {
      "d": 3,
      "Q": -6.01649,
      "w": [
       1.817
      ],
      "signature": [
       1,
       1
      ],
      "D": 6
     },
     {
      "d": 4,
      "Q": -6.04536,
      "w": [
       1.1166,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 8
     }
    ],
    "npa_5_1": -6.06803
   }
  },
  {
   "id": "322/44",
   "scenario": "322",
   "couplings": {
    "Jx": -3,
    "Jy": -11,
    "Jxx": -3,
    "Jxy": 7,
    "Jyx": 5,
    "Jyy": 6,
    "JACxx": 2,
    "JACxy": -2,
    "JACyx": -1,
    "JACyy": 5
   },
   "classical_bound": -11,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -11.00119,
      "w": [
       0.1638
      ],
      "signature": [
       1,
       1
      ],
      "D": 12
     },
     {
      "d": 4,
      "Q": -11.15383,
      "w": [
       0.0,
       0.5575
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -11.17826
   }
  },
  {
   "id": "322/45",
   "scenario": "322",
   "couplings": {
    "Jx": -2,
    "Jy": -6,
    "Jxx": -2,
    "Jxy": 3,
    "Jyx": 3,
    "Jyy": 4,
    "JACxx": 1,
    "JACxy": -1,
    "JACyx": -1,
    "JACyy": 3
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -6.18037,
      "w": [
       0.6128
      ],
      "signature": [
       1,
       1
      ],
      "D": 16
     },
     {
      "d": 4,
      "Q": -6.22875,
      "w": [
       0.0,
       0.7013
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -6.25396
   }
  },
  {
   "id": "322/46",
   "scenario": "322",
   "couplings": {
    "Jx": -4,
    "Jy": 0,
    "Jxx": -5,
    "Jxy": 2,
    "Jyx": 2,
    "Jyy": 1,
    "JACxx": 4,
    "JACxy": -1,
    "JACyx": -1,
    "JACyy": 0
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -6.0699,
      "w": [
       1.9751
      ],
      "signature": [
       1,
       1
      ],
      "D": 6
     },
     {
      "d": 3,
      "Q": -6.12318,
      "w": [
       0.921
      ],
      "signature": [
       1,
       2
      ],
      "D": 7
     },
     {
      "d": 4,
      "Q": -6.12318,
      "w": [
       1.5708,
       0.921
      ],
      "signature": [
       2,
       2
      ],
      "D": 7
     }
    ],
    "npa_5_1": -6.14907
   }
  },
  {
   "id": "322/47",
   "scenario": "322",
   "couplings": {
    "Jx": -2,
    "Jy": 2,
    "Jxx": 1,
    "Jxy": 1,
    "Jyx": 1,
    "Jyy": -3,
    "JACxx": 0,
    "JACxy": -1,
    "JACyx": -1,
    "JACyy": 2
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -4.07352,
      "w": [
       1.1798
      ],
      "signature": [
       1,
       1
      ],
      "D": 7
     },
     {
      "d": 3,
      "Q": -4.15468,
      "w": [
       0.959
      ],
      "signature": [
       1,
       2
      ],
      "D": 5
     },
     {
      "d": 4,
      "Q": -4.15469,
      "w": [
       1.5708,
       0.9587
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -4.18142
   }
  },
  {
   "id": "322/48",
   "scenario": "322",
   "couplings": {
    "Jx": -4,
    "Jy": 4,
    "Jxx": -5,
    "Jxy": 3,
    "Jyx": -2,
    "Jyy": -6,
    "JACxx": 2,
    "JACxy": -6,
    "JACyx": 1,
    "JACyy": 3
   },
   "classical_bound": -10,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -10.14203,
      "w": [
       0.9241,
       -1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -10.17428
   }
  },
  {
   "id": "322/49",
   "scenario": "322",
   "couplings": {
    "Jx": -4,
    "Jy": 2,
    "Jxx": -6,
    "Jxy": 3,
    "Jyx": 3,
    "Jyy": 2,
    "JACxx": 5,
    "JACxy": -1,
    "JACyx": -1,
    "JACyy": 1
   },
   "classical_bound": -8,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -8.07815,
      "w": [
       1.2431
      ],
      "signature": [
       1,
       1
      ],
      "D": 7
     },
     {
      "d": 3,
      "Q": -8.18189,
      "w": [
       1.0153
      ],
      "signature": [
       1,
       2
      ],
      "D": 5
     },
     {
      "d": 4,
      "Q": -8.18189,
      "w": [
       1.5708,
       1.0152
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -8.21614
   }
  },
  {
   "id": "322/50",
   "scenario": "322",
   "couplings": {
    "Jx": -6,
    "Jy": 2,
    "Jxx": 5,
    "Jxy": 1,
    "Jyx": -5,
    "Jyy": 1,
    "JACxx": 1,
    "JACxy": 0,
    "JACyx": -4,
    "JACyy": -2
   },
   "classical_bound": -7,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -7.00917,
      "w": [
       0.7748,
       -1.6163
      ],
      "signature": [
       2,
       2
      ],
      "D": 12
     }
    ],
    "npa_5_1": -7.04393
   }
  },
  {
   "id": "322/51",
   "scenario": "322",
   "couplings": {
    "Jx": 4,
    "Jy": -8,
    "Jxx": 3,
    "Jxy": 2,
    "Jyx": -7,
    "Jyy": 6,
    "JACxx": -2,
    "JACxy": 1,
    "JACyx": -6,
    "JACyy": 1
   },
   "classical_bound": -10,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -10.1051,
      "w": [
       -0.9808,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -10.14126
   }
  },
  {
   "id": "322/52",
   "scenario": "322",
   "couplings": {
    "Jx": -2,
    "Jy": 2,
    "Jxx": 1,
    "Jxy": 0,
    "Jyx": -1,
    "Jyy": 2,
    "JACxx": 2,
    "JACxy": 1,
    "JACyx": -2,
    "JACyy": 1
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -4.08523,
      "w": [
       1.5708,
       0.8681
      ],
      "signature": [
       2,
       2
      ],
      "D": 9
     }
    ],
    "npa_5_1": -4.12479
   }
  },
  {
   "id": "322/53",
   "scenario": "322",
   "couplings": {
    "Jx": 12,
    "Jy": 4,
    "Jxx": 7,
    "Jxy": 8,
    "Jyx": 6,
    "Jyy": -3,
    "JACxx": 6,
    "JACxy": -3,
    "JACyx": -1,
    "JACyy": 3
   },
   "classical_bound": -13,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -13.10714,
      "w": [
       0.0,
       -0.5039
      ],
      "signature": [
       2,
       2
      ],
      "D": 7
     }
    ],
    "npa_5_1": -13.14828
   }
  },
  {
   "id": "322/54",
   "scenario": "322",
   "couplings": {
    "Jx": -6,
    "Jy": 2,
    "Jxx": 5,
    "Jxy": 2,
    "Jyx": -3,
    "Jyy": 2,
    "JACxx": 1,
    "JACxy": 1,
    "JACyx": -2,
    "JACyy": 0
   },
   "classical_bound": -6,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -6.16786,
      "w": [
       0.8899,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 6
     }
    ],
    "npa_5_1": -6.21564
   }
  },
  {
   "id": "322/55",
   "scenario": "322",
   "couplings": {
    "Jx": 5,
    "Jy": -3,
    "Jxx": 1,
    "Jxy": -3,
    "Jyx": -5,
    "Jyy": -1,
    "JACxx": 4,
    "JACxy": 1,
    "JACyx": -4,
    "JACyy": 1
   },
   "classical_bound": -8,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -8.00371,
      "w": [
       2.3012,
       -1.5949
      ],
      "signature": [
       2,
       2
      ],
      "D": 16
     }
    ],
    "npa_5_1": -8.05192
   }
  },
  {
   "id": "322/56",
   "scenario": "322",
   "couplings": {
    "Jx": -7,
    "Jy": 1,
    "Jxx": 6,
    "Jxy": 1,
    "Jyx": -4,
    "Jyy": 1,
    "JACxx": 2,
    "JACxy": 1,
    "JACyx": -3,
    "JACyy": -1
   },
   "classical_bound": -7,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -7.01064,
      "w": [
       0.8015,
       1.6238
      ],
      "signature": [
       2,
       2
      ],
      "D": 12
     }
    ],
    "npa_5_1": -7.05935
   }
  },
  {
   "id": "322/57",
   "scenario": "322",
   "couplings": {
    "Jx": -1,
    "Jy": 5,
    "Jxx": 0,
    "Jxy": 0,
    "Jyx": 0,
    "Jyy": 4,
    "JACxx": -1,
    "JACxy": -1,
    "JACyx": -2,
    "JACyy": 3
   },
   "classical_bound": -5,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -5.05572,
      "w": [
       1.5708,
       1.0099
      ],
      "signature": [
       2,
       2
      ],
      "D": 9
     }
    ],
    "npa_5_1": -5.10699
   }
  },
  {
   "id": "322/58",
   "scenario": "322",
   "couplings": {
    "Jx": -6,
    "Jy": 2,
    "Jxx": 5,
    "Jxy": 0,
    "Jyx": -2,
    "Jyy": -1,
    "JACxx": 4,
    "JACxy": 1,
    "JACyx": -3,
    "JACyy": 1
   },
   "classical_bound": -7,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -7.00144,
      "w": [
       0.3372,
       1.5603
      ],
      "signature": [
       2,
       2
      ],
      "D": 11
     }
    ],
    "npa_5_1": -7.05714
   }
  },
  {
   "id": "322/59",
   "scenario": "322",
   "couplings": {
    "Jx": 6,
    "Jy": -2,
    "Jxx": 5,
    "Jxy": -1,
    "Jyx": -1,
    "Jyy": 1,
    "JACxx": 4,
    "JACxy": -2,
    "JACyx": -4,
    "JACyy": -2
   },
   "classical_bound": -8,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -8.17045,
      "w": [
       -1.5708,
       0.8676
      ],
      "signature": [
       2,
       2
      ],
      "D": 9
     },
     {
      "d": 5,
      "Q": -8.17045,
      "w": [
       0.8686,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 9
     }
    ],
    "npa_5_1": -8.2422
   }
  },
  {
   "id": "322/60",
   "scenario": "322",
   "couplings": {
    "Jx": -6,
    "Jy": -8,
    "Jxx": -4,
    "Jxy": 3,
    "Jyx": 3,
    "Jyy": 2,
    "JACxx": 3,
    "JACxy": 1,
    "JACyx": 1,
    "JACyy": 1
   },
   "classical_bound": -8,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -8.22013,
      "w": [
       0.9539
      ],
      "signature": [
       1,
       1
      ],
      "D": 5
     },
     {
      "d": 4,
      "Q": -8.22013,
      "w": [
       0.0,
       0.9539
      ],
      "signature": [
       2,
       2
      ],
      "D": 5
     }
    ],
    "npa_5_1": -8.29902
   }
  },
  {
   "id": "322/61",
   "scenario": "322",
   "couplings": {
    "Jx": -3,
    "Jy": 3,
    "Jxx": -3,
    "Jxy": -1,
    "Jyx": -2,
    "Jyy": 2,
    "JACxx": 2,
    "JACxy": 1,
    "JACyx": -1,
    "JACyy": 1
   },
   "classical_bound": -5,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -5.00822,
      "w": [
       0.3766
      ],
      "signature": [
       1,
       2
      ],
      "D": 11
     },
     {
      "d": 4,
      "Q": -5.00822,
      "w": [
       0.3774,
       1.5708
      ],
      "signature": [
       2,
       2
      ],
      "D": 11
     }
    ],
    "npa_5_1": -5.09824
   }
  },
  {
   "id": "322/62",
   "scenario": "322",
   "couplings": {
    "Jx": 6,
    "Jy": -2,
    "Jxx": 6,
    "Jxy": 0,
    "Jyx": -1,
    "Jyy": -1,
    "JACxx": 3,
    "JACxy": -1,
    "JACyx": -4,
    "JACyy": -1
   },
   "classical_bound": -7,
   "reference": {
    "quantum": [
     {
      "d": 4,
      "Q": -7.00638,
      "w": [
       2.1879,
       1.5295
      ],
      "signature": [
       2,
       2
      ],
      "D": 24
     }
    ],
    "npa_5_1": -7.10456
   }
  },
  {
   "id": "322/63",
   "scenario": "322",
   "couplings": {
    "Jx": -3,
    "Jy": -3,
    "Jxx": 0,
    "Jxy": 3,
    "Jyx": 1,
    "Jyy": -1,
    "JACxx": 1,
    "JACxy": -2,
    "JACyx": 1,
    "JACyy": 2
   },
   "classical_bound": -5,
   "reference": {
    "quantum": [
     {
      "d": 3,
      "Q": -5.00639,
      "w": [
       1.3547
      ],
      "signature": [
       1,
       1
      ],
      "D": 8
     },
     {
      "d": 4,
      "Q": -5.00639,
      "w": [
       1.3556,
       0.0
      ],
      "signature": [
       2,
       2
      ],
      "D": 8
     }
    ],
    "npa_5_1": -5.13037
   }
  },
  {
   "id": "232/1",
   "scenario": "232",
   "couplings": {
    "Jx": 3,
    "Jy": -2,
    "Jz": 1,
    "Jxx": 2,
    "Jxy": -2,
    "Jxz": 5,
    "Jyx": -1,
    "Jyy": 1,
    "Jyz": 3,
    "Jzx": 1,
    "Jzy": -2,
    "Jzz": -2
   },
   "classical_bound": -9,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -9.0
     },
     {
      "d": 3,
      "Q": -9.01875,
      "w": [
       0.3392,
       0.1055,
       0.4115,
       0.4133,
       0.3652,
       0.9916,
       0.481,
       -0.0351,
       -0.3163
      ],
      "signature": [
       2,
       1,
       1
      ],
      "D": 10
     },
     {
      "d": 4,
      "Q": -9.01875,
      "w": [
       -0.027,
       0.2185,
       0.0934,
       0.2068,
       0.3829,
       0.301,
       0.3126,
       0.3287,
       0.2716,
       0.1611,
       -0.2841,
       -0.4393,
       0.1235,
       0.103,
       0.1933,
       0.148,
       0.6689,
       1.0601
      ],
      "signature": [
       3,
       1,
       1
      ],
      "D": 10
     }
    ],
    "npa_4_1": -9.27833
   }
  },
  {
   "id": "232/2",
   "scenario": "232",
   "couplings": {
    "Jx": 2,
    "Jy": 1,
    "Jz": 1,
    "Jxx": 2,
    "Jxy": 2,
    "Jxz": 1,
    "Jyx": 0,
    "Jyy": -1,
    "Jyz": 0,
    "Jzx": -1,
    "Jzy": 1,
    "Jzz": 0
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -4.0
     },
     {
      "d": 3,
      "Q": -4.03928,
      "w": [
       0.5943,
       0.0469,
       0.2011,
       0.2756,
       0.4268,
       0.1822,
       0.0277,
       0.7213,
       0.1413
      ],
      "signature": [
       2,
       1,
       2
      ],
      "D": 10
     },
     {
      "d": 4,
      "Q": -4.03928,
      "w": [
       0.449,
       0.545,
       0.4828,
       0.0387,
       0.1335,
       0.1225,
       0.2003,
       0.2535,
       0.2878,
       0.0661,
       0.28,
       0.1061,
       0.0102,
       -0.0804,
       0.0821,
       0.032,
       0.3449,
       0.0535
      ],
      "signature": [
       3,
       2,
       3
      ],
      "D": 10
     }
    ],
    "npa_4_1": -4.20626
   }
  },
  {
   "id": "232/3",
   "scenario": "232",
   "couplings": {
    "Jx": 2,
    "Jy": -1,
    "Jz": 1,
    "Jxx": 1,
    "Jxy": -1,
    "Jxz": 2,
    "Jyx": -2,
    "Jyy": 0,
    "Jyz": 2,
    "Jzx": -1,
    "Jzy": 0,
    "Jzz": 0
   },
   "classical_bound": -5,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -5.0
     },
     {
      "d": 3,
      "Q": -5.04162,
      "w": [
       1.0061,
       -0.0081,
       0.2303,
       0.3148,
       0.0616,
       0.5666,
       -0.2498,
       0.2271,
       0.0076
      ],
      "signature": [
       2,
       1,
       2
      ],
      "D": 10
     },
     {
      "d": 4,
      "Q": -5.04162,
      "w": [
       0.5565,
       1.2916,
       0.8706,
       0.1371,
       0.1162,
       0.916,
       0.4551,
       0.5068,
       0.1782,
       0.4305,
       0.8979,
       0.1097,
       0.2928,
       -0.4064,
       0.1088,
       0.7717,
       0.6469,
       0.9466
      ],
      "signature": [
       3,
       2,
       3
      ],
      "D": 10
     }
    ],
    "npa_4_1": -5.14754
   }
  },
  {
   "id": "232/4",
   "scenario": "232",
   "couplings": {
    "Jx": 1,
    "Jy": -1,
    "Jz": 0,
    "Jxx": 1,
    "Jxy": 1,
    "Jxz": 2,
    "Jyx": 0,
    "Jyy": 1,
    "Jyz": -1,
    "Jzx": 0,
    "Jzy": 1,
    "Jzz": -1
   },
   "classical_bound": -4,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -4.0
     },
     {
      "d": 3,
      "Q": -4.01336,
      "w": [
       0.1303,
       -0.0032,
       0.5139,
       0.2574,
       0.4723,
       0.6582,
       0.3285,
       -0.1727,
       0.282
      ],
      "signature": [
       2,
       1,
       1
      ],
      "D": 10
     },
     {
      "d": 4,
      "Q": -4.11562,
      "w": [
       -0.2912,
       0.2321,
       0.0211,
       0.0911,
       0.2954,
       0.0986,
       0.6905,
       0.3049,
       0.3104,
       0.2755,
       0.1093,
       0.1728,
       0.0995,
       0.4044,
       -0.0148,
       0.1701,
       0.2056,
       0.4232
      ],
      "signature": [
       3,
       2,
       1
      ],
      "D": 10
     }
    ],
    "npa_4_1": -4.23786
   }
  },
  {
   "id": "232/5",
   "scenario": "232",
   "couplings": {
    "Jx": 0,
    "Jy": 0,
    "Jz": 0,
    "Jxx": 1,
    "Jxy": 1,
    "Jxz": 0,
    "Jyx": 0,
    "Jyy": 0,
    "Jyz": 0,
    "Jzx": -1,
    "Jzy": 1,
    "Jzz": 0
   },
   "classical_bound": -2,
   "reference": {
    "quantum": [
     {
      "d": 2,
      "Q": -2.0
     },
     {
      "d": 3,
      "Q": -2.08094,
      "w": [
       0.4899,
       -0.1481,
       0.1905,
       0.4931,
       0.4919,
       0.3638,
       -0.1067,
       0.716,
       0.2088
      ],
      "signature": [
       2,
       1,
       2
      ],
      "D": 10
     },
     {
      "d": 4,
      "Q": -2.08749,
      "w": [
       0.4998,
       0.0447,
       -0.3366,
       -0.0197,
       0.3869,
       -0.0971,
       0.2528,
       0.2196,
       0.5018,
       0.0579,
       0.1594,
       0.2374,
       0.0932,
       0.1598,
       0.5637,
       0.5072,
       0.2408,
       0.2743
      ],
      "signature": [
       2,
       1,
       2
      ],
      "D": 10
     }
    ],
    "npa_4_1": -2.28767
   }
  }
 ]
}
)CATALOG";

}  // namespace ticontext::detail
