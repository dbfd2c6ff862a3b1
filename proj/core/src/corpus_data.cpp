#include "qalg/corpus_data.hpp"

namespace qalg {

// the shipped example corpus; expectations carry provenance tags
const char* embedded_corpus_json() {
    return R"corpus(
[
 {
  "name": "dali-i-QQ",
  "presentation": "field: QQ\nvars: x,y,z\nrel: y^2 + x*y\nrel: x*y + z^2\nrel: x*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "dali-i-QQ-tfe",
  "presentation": "field: QQ\nvars: x,y,z,u\nrel: y^2 + x*y\nrel: x*y + z^2\nrel: x*z\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "dali-i-F5",
  "presentation": "field: GF(5)\nvars: x,y,z\nrel: y^2 + x*y\nrel: x*y + z^2\nrel: x*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "dali-i-F5-tfe",
  "presentation": "field: GF(5)\nvars: x,y,z,u\nrel: y^2 + x*y\nrel: x*y + z^2\nrel: x*z\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "dali-ii-QQ",
  "presentation": "field: QQ\nvars: x,y,z\nrel: y^2\nrel: x*y + z^2\nrel: x*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "dali-ii-QQ-tfe",
  "presentation": "field: QQ\nvars: x,y,z,u\nrel: y^2\nrel: x*y + z^2\nrel: x*z\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "dali-ii-F5",
  "presentation": "field: GF(5)\nvars: x,y,z\nrel: y^2\nrel: x*y + z^2\nrel: x*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "dali-ii-F5-tfe",
  "presentation": "field: GF(5)\nvars: x,y,z,u\nrel: y^2\nrel: x*y + z^2\nrel: x*z\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "dali-iii-QQ",
  "presentation": "field: QQ\nvars: x,y,z\nrel: y^2\nrel: x*y + y*z + z^2\nrel: x*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "dali-iii-QQ-tfe",
  "presentation": "field: QQ\nvars: x,y,z,u\nrel: y^2\nrel: x*y + y*z + z^2\nrel: x*z\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "dali-iii-F5",
  "presentation": "field: GF(5)\nvars: x,y,z\nrel: y^2\nrel: x*y + y*z + z^2\nrel: x*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "dali-iii-F5-tfe",
  "presentation": "field: GF(5)\nvars: x,y,z,u\nrel: y^2\nrel: x*y + y*z + z^2\nrel: x*z\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "dali-i-F4",
  "presentation": "field: GF(2)^2\nvars: x,y,z\nrel: y^2 + x*y\nrel: x*y + z^2\nrel: x*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "nk1-b1-F2",
  "presentation": "field: GF(2)\nvars: x,y,z\nrel: x*y\nrel: x^2 - y*z\nrel: y^2 - x*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "nk1-b1-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,u\nrel: x*y\nrel: x^2 - y*z\nrel: y^2 - x*z\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "nk2-g0-F2",
  "presentation": "field: GF(2)\nvars: x,y,z\nrel: x*y\nrel: x^2 - y*z\nrel: z^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "nk2-g0-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,u\nrel: x*y\nrel: x^2 - y*z\nrel: z^2\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "nk2-g1-F2",
  "presentation": "field: GF(2)\nvars: x,y,z\nrel: x*y\nrel: x^2 - y*z\nrel: z^2 - x*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "nk2-g1-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,u\nrel: x*y\nrel: x^2 - y*z\nrel: z^2 - x*z\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "nk3-a1g0-F2",
  "presentation": "field: GF(2)\nvars: x,y,z\nrel: x*y\nrel: z^2 + y^2\nrel: x*z + y*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "nk3-a1g0-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,u\nrel: x*y\nrel: z^2 + y^2\nrel: x*z + y*z\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "nk3-a0g1-F2",
  "presentation": "field: GF(2)\nvars: x,y,z\nrel: x*y\nrel: z^2\nrel: x*z + y*z + x^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED"
  }
 },
 {
  "name": "nk3-a0g1-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,u\nrel: x*y\nrel: z^2\nrel: x*z + y*z + x^2\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1,
    1,
    1,
    1,
    1,
    1
   ],
   "koszul": false,
   "exceptional": true,
   "witness_codim_max": 3,
   "provenance": "PAPER: Main Theorem (3), series (1+2t-2t^3)(1-t)^-1; witness bound from the Main Theorem; verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "nk3-a1g1-F2",
  "presentation": "field: GF(2)\nvars: x,y,z\nrel: x*y\nrel: z^2 + y^2 + y*z\nrel: x*z + y*z + x^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    0,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "CI(e=3)",
   "provenance": "DERIVED: both parameters nonzero degenerates to a CI over F_2"
  }
 },
 {
  "name": "nk3-a1g1-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,u\nrel: x*y\nrel: z^2 + y^2 + y*z\nrel: x*z + y*z + x^2\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    0,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "CI(e=3)",
   "provenance": "DERIVED: both parameters nonzero degenerates to a CI over F_2; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "case1-F2",
  "presentation": "field: GF(2)\nvars: x,y\nrel: x^2\nrel: y^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    2,
    1,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(1)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED"
  }
 },
 {
  "name": "case1-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,u\nrel: x^2\nrel: y^2\nrel: x*u\nrel: y*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    1,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(1)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "case2-F2",
  "presentation": "field: GF(2)\nvars: x,y,z\nrel: x^2\nrel: x*y\nrel: y^2 - x*z\nrel: z^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    2,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(1)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED"
  }
 },
 {
  "name": "case2-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,u\nrel: x^2\nrel: x*y\nrel: y^2 - x*z\nrel: z^2\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    2,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(1)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "case3-F2",
  "presentation": "field: GF(2)\nvars: x,y,z,w\nrel: x^2\nrel: x*y\nrel: y*w\nrel: y^2 - x*z\nrel: z^2\nrel: z*w\nrel: w^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(1)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED"
  }
 },
 {
  "name": "case3-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,w,u\nrel: x^2\nrel: x*y\nrel: y*w\nrel: y^2 - x*z\nrel: z^2\nrel: z*w\nrel: w^2\nrel: x*u\nrel: y*u\nrel: z*u\nrel: w*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    5,
    3,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(1)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "case4-F2",
  "presentation": "field: GF(2)\nvars: x,y,z,w\nrel: x^2\nrel: x*z\nrel: y^2 - x*y\nrel: y*w\nrel: z^2\nrel: z*w\nrel: w^2 - x*w\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(2)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED"
  }
 },
 {
  "name": "case4-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,w,u\nrel: x^2\nrel: x*z\nrel: y^2 - x*y\nrel: y*w\nrel: z^2\nrel: z*w\nrel: w^2 - x*w\nrel: x*u\nrel: y*u\nrel: z*u\nrel: w*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    5,
    3,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(2)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "case5-F2",
  "presentation": "field: GF(2)\nvars: x,y,z,w\nrel: x^2\nrel: x*w\nrel: y^2 - x*z\nrel: y*w - x*y\nrel: w^2 - y*z\nrel: z^2\nrel: z*w\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(8)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED"
  }
 },
 {
  "name": "case5-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,w,u\nrel: x^2\nrel: x*w\nrel: y^2 - x*z\nrel: y*w - x*y\nrel: w^2 - y*z\nrel: z^2\nrel: z*w\nrel: x*u\nrel: y*u\nrel: z*u\nrel: w*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    5,
    3,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(8)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "case6-F2",
  "presentation": "field: GF(2)\nvars: x,y,z,w\nrel: x^2\nrel: x*z\nrel: y*z\nrel: z*w\nrel: w^2\nrel: y^2 - x*y\nrel: z^2 - x*w\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(8)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED"
  }
 },
 {
  "name": "case6-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,w,u\nrel: x^2\nrel: x*z\nrel: y*z\nrel: z*w\nrel: w^2\nrel: y^2 - x*y\nrel: z^2 - x*w\nrel: x*u\nrel: y*u\nrel: z*u\nrel: w*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    5,
    3,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(8)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "case7-F2",
  "presentation": "field: GF(2)\nvars: x,y,z,w\nrel: x^2\nrel: x*z\nrel: x*w\nrel: y^2 - x*y\nrel: y*w\nrel: z^2 - y*z\nrel: w^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(7)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED"
  }
 },
 {
  "name": "case7-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,w,u\nrel: x^2\nrel: x*z\nrel: x*w\nrel: y^2 - x*y\nrel: y*w\nrel: z^2 - y*z\nrel: w^2\nrel: x*u\nrel: y*u\nrel: z*u\nrel: w*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    5,
    3,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(7)",
   "provenance": "PAPER: Theorem 3.1 witness bound; case and verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "case8-F3",
  "presentation": "field: GF(3)\nvars: x,y\nrel: x*y\nrel: x^2 - y^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    2,
    1,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(8)",
   "provenance": "PAPER: section 3.2 condition (8); DERIVED"
  }
 },
 {
  "name": "case8-F3-tfe",
  "presentation": "field: GF(3)\nvars: x,y,u\nrel: x*y\nrel: x^2 - y^2\nrel: x*u\nrel: y*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    1,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "3.2(8)",
   "provenance": "PAPER: section 3.2 condition (8); DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "ci3-QQ",
  "presentation": "field: QQ\nvars: x,y,z\nrel: x^2\nrel: y^2\nrel: z^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "CI(e=3)",
   "provenance": "PAPER: Prop 3.3(c) complete intersection tail"
  }
 },
 {
  "name": "ci3-QQ-tfe",
  "presentation": "field: QQ\nvars: x,y,z,u\nrel: x^2\nrel: y^2\nrel: z^2\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "CI(e=3)",
   "provenance": "PAPER: Prop 3.3(c) complete intersection tail; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "ci3-F2",
  "presentation": "field: GF(2)\nvars: x,y,z\nrel: x^2\nrel: x*y + z^2\nrel: y^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    3,
    1,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "CI(e=3)",
   "provenance": "PAPER: Prop 3.3(c); DERIVED"
  }
 },
 {
  "name": "ci3-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,u\nrel: x^2\nrel: x*y + z^2\nrel: y^2\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "case": "CI(e=3)",
   "provenance": "PAPER: Prop 3.3(c); DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "mm2-F2",
  "presentation": "field: GF(2)\nvars: x,y\nrel: x^2\nrel: x*y\nrel: y^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    2,
    0
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 3,
   "provenance": "TRIVIAL: square-zero ring; Golod oracle ring of the acceptance suite"
  }
 },
 {
  "name": "p42a-QQ",
  "presentation": "field: QQ\nvars: x,y,z\nrel: x^2\nrel: x*y\nrel: y*z\nrel: z^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    2,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "4.2(a)",
   "provenance": "PAPER: Theorem 4.1 witness bound (codim <= 1); case and verdicts DERIVED"
  }
 },
 {
  "name": "p42a-QQ-tfe",
  "presentation": "field: QQ\nvars: x,y,z,u\nrel: x^2\nrel: x*y\nrel: y*z\nrel: z^2\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    2,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "4.2(a)",
   "provenance": "PAPER: Theorem 4.1 witness bound (codim <= 1); case and verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "p42a-F2",
  "presentation": "field: GF(2)\nvars: x,y,z\nrel: x^2\nrel: x*y\nrel: y*z\nrel: z^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    2,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "4.2(a)",
   "provenance": "PAPER: Theorem 4.1 witness bound (codim <= 1); case and verdicts DERIVED"
  }
 },
 {
  "name": "p42a-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,u\nrel: x^2\nrel: x*y\nrel: y*z\nrel: z^2\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    2,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "4.2(a)",
   "provenance": "PAPER: Theorem 4.1 witness bound (codim <= 1); case and verdicts DERIVED; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "p42c-QQ",
  "presentation": "field: QQ\nvars: x,y,z\nrel: x^2\nrel: x*y\nrel: y^2 - x*z\nrel: y*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    2,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "4.2(c)",
   "provenance": "PAPER: Prop 4.2(c) relations; Theorem 4.1 bound"
  }
 },
 {
  "name": "p42c-QQ-tfe",
  "presentation": "field: QQ\nvars: x,y,z,u\nrel: x^2\nrel: x*y\nrel: y^2 - x*z\nrel: y*z\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    2,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "4.2(c)",
   "provenance": "PAPER: Prop 4.2(c) relations; Theorem 4.1 bound; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "p42c-F2",
  "presentation": "field: GF(2)\nvars: x,y,z\nrel: x^2\nrel: x*y\nrel: y^2 - x*z\nrel: y*z\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    2,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "4.2(c)",
   "provenance": "PAPER: Prop 4.2(c) relations; Theorem 4.1 bound"
  }
 },
 {
  "name": "p42c-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,u\nrel: x^2\nrel: x*y\nrel: y^2 - x*z\nrel: y*z\nrel: x*u\nrel: y*u\nrel: z*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    2,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "4.2(c)",
   "provenance": "PAPER: Prop 4.2(c) relations; Theorem 4.1 bound; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "hyper-QQ",
  "presentation": "field: QQ\nvars: x,y\nrel: x^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    2,
    2,
    2
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "4.2(b)",
   "provenance": "TRIVIAL: hypersurface"
  }
 },
 {
  "name": "hyper-QQ-tfe",
  "presentation": "field: QQ\nvars: x,y,u\nrel: x^2\nrel: x*u\nrel: y*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    2,
    2
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "4.2(b)",
   "provenance": "TRIVIAL: hypersurface; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "poly1-QQ",
  "presentation": "field: QQ\nvars: x\n",
  "expected": {
   "hilbert_prefix": [
    1,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 0,
   "case": "polynomial",
   "provenance": "TRIVIAL: polynomial ring is Golod"
  }
 },
 {
  "name": "conca-ray-F2",
  "presentation": "field: GF(2)\nvars: x,y\nrel: x^2\nrel: x*y\n",
  "expected": {
   "hilbert_prefix": [
    1,
    2,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "polynomial",
   "provenance": "DERIVED: socle reduction leaves a polynomial ring"
  }
 },
 {
  "name": "conca-ray-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,u\nrel: x^2\nrel: x*y\nrel: x*u\nrel: y*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    3,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 1,
   "case": "polynomial",
   "provenance": "DERIVED: socle reduction leaves a polynomial ring; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "s5case2-F2",
  "presentation": "field: GF(2)\nvars: x1,x2,x3,x4\nrel: x1^2\nrel: x1*x4\nrel: x1*x2\nrel: x2*x4\nrel: x2*x3\nrel: x2^2 - x3*x4\nrel: x4^2 - x1*x3\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 2,
   "case": "2.11",
   "provenance": "PAPER: section 5 theorem witness bound (codim <= 2); DERIVED verdicts"
  }
 },
 {
  "name": "s5case2-F2-tfe",
  "presentation": "field: GF(2)\nvars: x1,x2,x3,x4,u\nrel: x1^2\nrel: x1*x4\nrel: x1*x2\nrel: x2*x4\nrel: x2*x3\nrel: x2^2 - x3*x4\nrel: x4^2 - x1*x3\nrel: x1*u\nrel: x2*u\nrel: x3*u\nrel: x4*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    5,
    3,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 2,
   "case": "2.11",
   "provenance": "PAPER: section 5 theorem witness bound (codim <= 2); DERIVED verdicts; trivial fiber extension variant (section 1.9 transfer)"
  }
 },
 {
  "name": "s5case1-F2",
  "presentation": "field: GF(2)\nvars: x,y,z,w\nrel: x^2\nrel: x*y\nrel: y*z\nrel: y*w\nrel: z^2\nrel: z*w\nrel: w^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    4,
    3,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 2,
   "case": "2.11",
   "provenance": "PAPER: section 5 theorem witness bound (codim <= 2); DERIVED verdicts"
  }
 },
 {
  "name": "s5case1-F2-tfe",
  "presentation": "field: GF(2)\nvars: x,y,z,w,u\nrel: x^2\nrel: x*y\nrel: y*z\nrel: y*w\nrel: z^2\nrel: z*w\nrel: w^2\nrel: x*u\nrel: y*u\nrel: z*u\nrel: w*u\nrel: u^2\n",
  "expected": {
   "hilbert_prefix": [
    1,
    5,
    3,
    1,
    1,
    1
   ],
   "koszul": true,
   "exceptional": false,
   "witness_codim_max": 2,
   "case": "2.11",
   "provenance": "PAPER: section 5 theorem witness bound (codim <= 2); DERIVED verdicts; trivial fiber extension variant (section 1.9 transfer)"
  }
 }
]
)corpus";
}

}  // namespace qalg
