#pragma once

// Frozen reference tables for the acceptance suite.
//
// Format: one entry per line, "n | partition | ascending L-coefficients".
// Every (n, partition) pair not listed for a covered n has coefficient zero.
//
// The universal-Jacobian table covers 1 <= n <= 8 and is palindromic with
// centre n + 1; the stable-curve table covers 2 <= n <= 9 with centre n.

namespace acceptance_data {

inline constexpr const char* kJacobianTable = R"(
1 | 1 | 1,2,1
2 | 2 | 1,3,3,1
2 | 1,1 | 0,1,1
3 | 3 | 1,4,7,4,1
3 | 2,1 | 0,2,4,2
4 | 4 | 1,5,13,13,5,1
4 | 3,1 | 0,3,10,10,3
4 | 2,2 | 0,1,4,4,1
4 | 2,1,1 | 0,0,1,1
5 | 5 | 1,6,21,31,21,6,1
5 | 4,1 | 0,4,20,34,20,4
5 | 3,2 | 0,2,12,21,12,2
5 | 3,1,1 | 0,0,3,7,3
5 | 2,2,1 | 0,0,2,4,2
6 | 6 | 1,7,31,63,63,31,7,1
6 | 5,1 | 0,5,33,82,82,33,5
6 | 4,2 | 0,3,26,71,71,26,3
6 | 4,1,1 | 0,0,7,27,27,7
6 | 3,3 | 0,1,9,26,26,9,1
6 | 3,2,1 | 0,0,6,23,23,6
6 | 3,1,1,1 | 0,0,0,1,1
6 | 2,2,2 | 0,0,1,4,4,1
6 | 2,2,1,1 | 0,0,0,1,1
7 | 7 | 1,8,42,110,154,110,42,8,1
7 | 6,1 | 0,6,50,167,247,167,50,6
7 | 5,2 | 0,4,44,168,262,168,44,4
7 | 5,1,1 | 0,0,12,67,112,67,12
7 | 4,3 | 0,2,26,108,172,108,26,2
7 | 4,2,1 | 0,0,14,83,146,83,14
7 | 4,1,1,1 | 0,0,0,6,14,6
7 | 3,3,1 | 0,0,5,33,58,33,5
7 | 3,2,2 | 0,0,3,20,37,20,3
7 | 3,2,1,1 | 0,0,0,6,14,6
7 | 2,2,2,1 | 0,0,0,2,4,2
8 | 8 | 1,9,55,177,322,322,177,55,9,1
8 | 7,1 | 0,7,69,293,596,596,293,69,7
8 | 6,2 | 0,5,68,337,739,739,337,68,5
8 | 6,1,1 | 0,0,19,139,342,342,139,19
8 | 5,3 | 0,3,48,267,618,618,267,48,3
8 | 5,2,1 | 0,0,24,199,530,530,199,24
8 | 5,1,1,1 | 0,0,0,16,62,62,16
8 | 4,4 | 0,1,19,109,257,257,109,19,1
8 | 4,3,1 | 0,0,16,145,401,401,145,16
8 | 4,2,2 | 0,0,7,69,202,202,69,7
8 | 4,2,1,1 | 0,0,0,25,100,100,25
8 | 4,1,1,1,1 | 0,0,0,0,2,2
8 | 3,3,2 | 0,0,3,34,103,103,34,3
8 | 3,3,1,1 | 0,0,0,10,42,42,10
8 | 3,2,2,1 | 0,0,0,9,37,37,9
8 | 3,2,1,1,1 | 0,0,0,0,2,2
8 | 2,2,2,2 | 0,0,0,1,4,4,1
8 | 2,2,2,1,1 | 0,0,0,0,1,1
)";

inline constexpr const char* kStableTable = R"(
2 | 2 | 1,2,1
3 | 3 | 1,3,3,1
3 | 2,1 | 0,1,1
4 | 4 | 1,4,7,4,1
4 | 3,1 | 0,2,4,2
4 | 2,2 | 0,1,2,1
5 | 5 | 1,5,12,12,5,1
5 | 4,1 | 0,3,11,11,3
5 | 3,2 | 0,2,7,7,2
5 | 3,1,1 | 0,0,1,1
5 | 2,2,1 | 0,0,1,1
6 | 6 | 1,6,20,29,20,6,1
6 | 5,1 | 0,4,20,33,20,4
6 | 4,2 | 0,3,18,31,18,3
6 | 4,1,1 | 0,0,4,9,4
6 | 3,3 | 0,1,6,11,6,1
6 | 3,2,1 | 0,0,4,8,4
6 | 2,2,2 | 0,0,1,2,1
7 | 7 | 1,7,28,56,56,28,7,1
7 | 6,1 | 0,5,34,81,81,34,5
7 | 5,2 | 0,4,32,85,85,32,4
7 | 5,1,1 | 0,0,8,29,29,8
7 | 4,3 | 0,2,20,56,56,20,2
7 | 4,2,1 | 0,0,11,41,41,11
7 | 4,1,1,1 | 0,0,0,2,2
7 | 3,3,1 | 0,0,4,16,16,4
7 | 3,2,2 | 0,0,3,11,11,3
7 | 3,2,1,1 | 0,0,0,2,2
7 | 2,2,2,1 | 0,0,0,1,1
8 | 8 | 1,8,39,98,136,98,39,8,1
8 | 7,1 | 0,6,49,159,232,159,49,6
8 | 6,2 | 0,5,53,193,294,193,53,5
8 | 6,1,1 | 0,0,14,73,119,73,14
8 | 5,3 | 0,3,38,155,243,155,38,3
8 | 5,2,1 | 0,0,20,115,195,115,20
8 | 5,1,1,1 | 0,0,0,8,17,8
8 | 4,4 | 0,1,16,66,105,66,16,1
8 | 4,3,1 | 0,0,14,87,150,87,14
8 | 4,2,2 | 0,0,7,45,80,45,7
8 | 4,2,1,1 | 0,0,0,14,30,14
8 | 3,3,2 | 0,0,3,22,39,22,3
8 | 3,3,1,1 | 0,0,0,6,13,6
8 | 3,2,2,1 | 0,0,0,6,12,6
8 | 2,2,2,2 | 0,0,0,1,2,1
9 | 9 | 1,9,50,157,278,278,157,50,9,1
9 | 8,1 | 0,7,69,279,554,554,279,69,7
9 | 7,2 | 0,6,76,364,775,775,364,76,6
9 | 7,1,1 | 0,0,21,147,351,351,147,21
9 | 6,3 | 0,4,65,348,779,779,348,65,4
9 | 6,2,1 | 0,0,33,259,657,657,259,33
9 | 6,1,1,1 | 0,0,0,21,74,74,21
9 | 5,4 | 0,2,37,214,497,497,214,37,2
9 | 5,3,1 | 0,0,27,242,647,647,242,27
9 | 5,2,2 | 0,0,12,116,320,320,116,12
9 | 5,2,1,1 | 0,0,0,42,155,155,42
9 | 5,1,1,1,1 | 0,0,0,0,3,3
9 | 4,4,1 | 0,0,12,109,293,293,109,12
9 | 4,3,2 | 0,0,10,109,315,315,109,10
9 | 4,3,1,1 | 0,0,0,35,132,132,35
9 | 4,2,2,1 | 0,0,0,25,96,96,25
9 | 4,2,1,1,1 | 0,0,0,0,6,6
9 | 3,3,3 | 0,0,1,15,45,45,15,1
9 | 3,3,2,1 | 0,0,0,13,51,51,13
9 | 3,3,1,1,1 | 0,0,0,0,3,3
9 | 3,2,2,2 | 0,0,0,4,15,15,4
9 | 3,2,2,1,1 | 0,0,0,0,3,3
9 | 2,2,2,2,1 | 0,0,0,0,1,1
)";

// The six degree-zero Jacobians of the four-component necklace: cycle word,
// the four component multidegrees, and the polarisation.  The third and
// fifth coordinates of the polarisations in rows two and four are forced by
// the averaging formula (the components listed are authoritative).
inline constexpr const char* kFourComponentTable = R"(
1,2,3,4 | 1,-1,0,0 ; 1,0,-1,0 ; 1,0,0,-1 ; 0,0,0,0 | 3/4,-1/4,-1/4,-1/4
1,2,4,3 | 1,-1,0,0 ; 1,0,-1,0 ; 0,0,-1,1 ; 0,0,0,0 | 1/2,-1/4,-1/2,1/4
1,3,2,4 | 1,-1,0,0 ; 1,-1,1,-1 ; 1,0,0,-1 ; 0,0,0,0 | 3/4,-1/2,1/4,-1/2
1,3,4,2 | 1,-1,0,0 ; 1,-1,1,-1 ; 0,-1,1,0 ; 0,0,0,0 | 1/2,-3/4,1/2,-1/4
1,4,2,3 | 1,-1,0,0 ; 0,-1,0,1 ; 0,0,-1,1 ; 0,0,0,0 | 1/4,-1/2,-1/4,1/2
1,4,3,2 | 1,-1,0,0 ; 0,-1,0,1 ; 0,-1,1,0 ; 0,0,0,0 | 1/4,-3/4,1/4,1/4
)";

}  // namespace acceptance_data
