#ifndef PRA_CORPUS_DATA_HPP
#define PRA_CORPUS_DATA_HPP

namespace pra {

// The transcribed corpus (generated by scripts/extract_corpus.py).
inline const char* embedded_corpus() {
  return R"PRA_CORPUS(# Primitive Recursive Arithmetic corpus: the construction of Eq,
# the case symbol and characteristic terms, bounded quantifiers,
# and string combinatorics, in source order (/12 ... /013).

r /12. x + 0 = x & x + S y = S ( x + y )

t /13b. 0 + 0 = 0 + 0
proof.
H
/5 ; 0 + 0
qed.

t /13i. x + 0 = 0 + x -> S x + 0 = 0 + S x
proof.
H : x
/12 ; S x
/12 ; 0 ; x
/12 ; x
qed.

t /13. x + 0 = 0 + x

t /14b. x + S 0 = S x + 0
proof.
H : x
/12 ; x ; 0
/12 ; x
/12 ; S x
qed.

t /14i. x + S y = S x + y -> x + S S y = S x + S y
proof.
H : x : y
/12 ; x ; S y
/12 ; S x ; y
qed.

t /14. x + S y = S x + y

t /15b. x + 0 = 0 -> x = 0 & 0 = 0
proof.
H : x
/12 ; x
qed.

t /15i. [ x + y = 0 -> x = 0 & y = 0 ] -> [ x + S y = 0 -> x = 0 & S y = 0 ]
proof.
H : x : y
/12 ; x ; y
/3 ; x + y
qed.

t /15. x + y = 0 -> x = 0 & y = 0

r /16. P 0 = 0 & P S x = x

r /17. x -. 0 = x & x -. S y = P ( x -. y )

t /18b. S x -. S 0 = x -. 0
proof.
H : x
/17 ; S x ; 0
/17 ; S x
/16 ; x
/17 ; x
qed.

t /18i. S x -. S y = x -. y -> S x -. S S y = x -. S y
proof.
H : x : y
/17 ; S x ; S y
/17 ; x ; y
qed.

t /18. S x -. S y = x -. y

t /19b. 0 -. 0 = 0
proof.
H
/17 ; 0
qed.

t /19i. x -. x = 0 -> S x -. S x = 0
proof.
H : x
/18 ; x ; x
qed.

t /19. x -. x = 0

t /20b. S 0 -. 0 = S 0
proof.
H
/17 ; S 0
qed.

t /20i. S x -. x = S 0 -> S S x -. S x = S 0
proof.
H : x
/18 ; S x ; x
qed.

t /20. S x -. x = S 0

t /21. S x -. x != 0
proof.
H : x
/20 ; x
/3 ; 0
qed.

t /22b. 0 != 0 -> 0 = S P 0
proof.
H
/5 ; 0
qed.

t /22i. [ x != 0 -> x = S P x ] -> [ S x != 0 -> S x = S P S x ]
proof.
H : x
/16 ; x
qed.

t /22. x != 0 -> x = S P x

t /23b. y -. 0 != 0 -> 0 + ( y -. 0 ) = y
proof.
H : y
/17 ; y
/13 ; y
/12 ; y
qed.

t /23i. [ y -. x != 0 -> x + ( y -. x ) = y ] -> [ y -. S x != 0 -> S x + ( y -. S x ) = y ]
proof.
H : y : x
/17 ; y ; x
/16 ; y -. x
/14 ; x ; P ( y -. x )
/22 ; y -. x
qed.

t /23. y -. x != 0 -> x + ( y -. x ) = y

t /24. y -. x = S 0 -> S x = y
proof.
H : y : x
/3 ; 0
/23 ; y ; x
/12 ; x ; 0
qed.

t /25. x != 0 & P x = 0 -> x = S 0
proof.
H : x
/22 ; x
qed.

t /26. y -. x != 0 & y -. S x = 0 -> y -. x = S 0
proof.
H : y : x
/17 ; y ; x
/25 ; y -. x
qed.

t /27. y -. x != 0 -> S x = y | y -. S x != 0
proof.
H : y : x
/26 ; y ; x
/24 ; y ; x
qed.

t /28b. x -. 0 != 0 -> S x -. 0 != 0
proof.
H : x
/17 ; S x
/3 ; x
qed.

t /28i. [ x -. y != 0 -> S x -. y != 0 ] -> [ x -. S y != 0 -> S x -. S y != 0 ]
proof.
H : x : y
/18 ; x ; y
/17 ; x ; y
/16
qed.

t /28. x -. y != 0 -> S x -. y != 0

t /29b. 0 = y | y -. 0 != 0 | 0 -. y != 0
proof.
H : y
/17 ; y
qed.

t /29i. [ x = y | y -. x != 0 | x -. y != 0 ] -> [ S x = y | y -. S x != 0 | S x -. y != 0 ]
proof.
H : x : y
/21 ; x
/27 ; y ; x
/28 ; x ; y
qed.

t /29. x = y | y -. x != 0 | x -. y != 0

t /30. x -. y = 0 & y -. x = 0 -> x = y
proof.
H : x : y
/29 ; x ; y
qed.

e /31. Eq ( x , y ) = ( x -. y ) + ( y -. x )

t /32. Eq ( x , y ) = 0 <-> x = y
proof.
H : x : y
/31 ; x ; y
/15 ; x -. y ; y -. x
/30 ; x ; y
/19 ; x
/12 ; 0
? Eq ( x , y ) != 0
qed.

r /33. C ( 0 , y , z ) = y & C ( S x , y , z ) = z

t /34. x != 0 -> C ( x , y , z ) = z
proof.
H : x : y : z
/22 ; x
/33 ; y ; z ; P x
qed.

t /35. C ( x , y , z ) != z -> x = 0 & C ( x , y , z ) = y
proof.
H : x : y : z
/34 ; x ; y ; z
/33 ; y ; z
qed.

t /36. C ( x , 0 , S 0 ) = 0 <-> x = 0
proof.
H : x
/22 ; x
/33 ; 0 ; S 0 ; P x
/3 ; 0
? x != 0
qed.

t /37. C ( x , S 0 , 0 ) = 0 <-> x != 0
proof.
H : x
/22 ; x
/33 ; S 0 ; 0 ; P x
/3 ; 0
? x = 0
qed.

t /38. C ( x , 0 , S 0 ) = 0 | C ( x , 0 , S 0 ) = S 0
proof.
H : x
/22 ; x
/33 ; 0 ; S 0 ; P x
qed.

t /39. C ( x , S 0 , 0 ) = 0 | C ( x , S 0 , 0 ) = S 0
proof.
H : x
/22 ; x
/33 ; S 0 ; 0 ; P x
qed.

t /40. C ( x , 0 , 0 ) = 0
proof.
H : x
/22 ; x
/33 ; 0 ; 0 ; P x
qed.

t /41a. C ( x , 0 , C ( y , 0 , S 0 ) ) = 0 -> x = 0 | y = 0
proof.
H : x : y
/36 ; y
/22 ; x
/33 ; 0 ; C ( y , 0 , S 0 ) ; P x
qed.

t /41b. x = 0 | y = 0 -> C ( x , 0 , C ( y , 0 , S 0 ) ) = 0
proof.
H : x : y
/36 ; y
/22 ; x
/33 ; 0 ; C ( y , 0 , S 0 ) ; P x
qed.

t /41. C ( x , 0 , C ( y , 0 , S 0 ) ) = 0 <-> x = 0 | y = 0
proof.
H : x : y
/41a ; x ; y
/41b ; x ; y
qed.

e /42. x =. y = C ( Eq ( x , y ) , 0 , S 0 )

e /43. ~. x = C ( x , S 0 , 0 )

e /44. x |. y = C ( x , 0 , C ( y , 0 , S 0 ) )

t /45. x =. y = 0 | x =. y = S 0
proof.
H : x : y
/42 ; x ; y
/38 ; Eq ( x , y )
qed.

t /46. ~. x = 0 | ~. x = S 0
proof.
H : x
/43 ; x
/39 ; x
qed.

t /47. x |. y = 0 | x |. y = S 0
proof.
H : x : y
/44 ; x ; y
/38 ; y
/40 ; x
/38 ; x
qed.

e /48. x &. y = ~. ( ~. x |. ~. y )

e /49. x ->. y = ~. x |. y

e /50. x <->. y = ( ~. x |. y ) &. ( x |. ~. y )

schema T/51. chi A = 0 <-> A

schema T/52. chi A = 0 | chi A = S 0

schema T/53. chi A = S 0 <-> ~ A

schema T/54. [ A <-> B ] <-> chi A = chi B

d /55. x <= y <-> x -. y = 0

d /56. x < y <-> x <= y & x != y

pragma bounding < @b by /56

t /57. x <= 0 -> x = 0
proof.
H : x
/55-> ; x ; 0
/17 ; x
qed.

t /58. 0 <= x
proof.
H : x
/55<- ; 0 ; x
/23 ; 0 ; x
/15 ; x ; 0 -. x
qed.

t /59. ~ S x <= x
proof.
H : x
/55-> ; S x ; x
/21 ; x
qed.

t /60. x <= x
proof.
H : x
/55<- ; x ; x
/19 ; x
qed.

t /61. x <= y -> x < y | x = y
proof.
H : x : y
/56<- ; x ; y
qed.

t /62. x < y | x = y -> x <= y
proof.
H : x : y
/56-> ; x ; y
/60 ; x
qed.

t /63. x <= S x
proof.
H : x
/17 ; x ; x
/19 ; x
/16
/55<- ; x ; S x
qed.

t /64b. P 0 <= 0
proof.
H
/16
/60 ; 0
qed.

t /64i. P x <= x -> P S x <= S x
proof.
H : x
/16 ; x
/63 ; x
qed.

t /64. P x <= x

t /65. x < y -> y -. x != 0
proof.
H : x : y
/56-> ; x ; y
/55-> ; x ; y
/29 ; x ; y
qed.

t /66. x < y -> y = x + ( y -. x )
proof.
H : x : y
/65 ; x ; y
/23 ; y ; x
qed.

t /67. x = y -> y = x + ( y -. x )
proof.
H : x : y
/19 ; y
/12 ; x
qed.

t /68. x <= y -> y = x + ( y -. x )
proof.
H : x : y
/56<- ; x ; y
/67 ; x ; y
/66 ; x ; y
qed.

t /69b. x -. ( y + 0 ) = ( x -. y ) -. 0
proof.
H : x : y
/12 ; y
/17 ; x -. y
qed.

t /69i. [ x -. ( y + z ) = ( x -. y ) -. z ] -> [ x -. ( y + S z ) = ( x -. y ) -. S z ]
proof.
H : x : y : z
/12 ; y ; z
/17 ; x ; y + z
/17 ; x -. y ; z
qed.

t /69. x -. ( y + z ) = ( x -. y ) -. z

t /70b. 0 -. 0 = 0
proof.
H
/19 ; 0
qed.

t /70i. 0 -. x = 0 -> 0 -. S x = 0
proof.
H : x
/17 ; 0 ; x
/16
qed.

t /70. 0 -. x = 0

t /71. x <= x + y
proof.
H : x : y
/69 ; x ; x ; y
/19 ; x
/70 ; y
/55<- ; x ; x + y
qed.

t /72b. x + ( y + 0 ) = ( x + y ) + 0
proof.
H : x : y
/12 ; y
/12 ; x + y
qed.

t /72i. x + ( y + z ) = ( x + y ) + z -> x + ( y + S z ) = ( x + y ) + S z
proof.
H : x : y :z
/12 ; y ; z
/12 ; x ; y + z
/12 ; x + y ; z
/4 ; x + ( y + z ) ; ( x + y ) + z
qed.

t /72. x + ( y + z ) = ( x + y ) + z

t /73. x <= y & y <= z -> x <= z
proof.
H ; x : y : z
/68 ; x ; y
/68 ; y ; z
/72 ; x ; y -. x ; z -. y
/71 ; x ; ( y -. x ) + ( z -. y )
qed.

t /74. x < y -> y -. x != 0
proof.
H : x : y
/56-> ; x ; y
/68 ; x ; y
/12 ; x
qed.

t /75. y -. x != 0 -> x < y
proof.
H : y : x
/23 ; y ; x
/71 ; x ; y -. x
/56<- ; x ; y
/19 ; x
qed.

t /76. x <= y & y <= x -> x = y
proof.
H : x : y
/55-> ; x ; y
/55-> ; y ; x
/30 ; x ; y
qed.

t /77. x < y | x = y | y < x
proof.
H : x : y
/75 ; x ; y
/75 ; y ; x
/30 ; x ; y
qed.

t /78. x < y -> ~ y <= x
proof.
H : x : y
/56-> ; x ; y
/76 ; x ; y
qed.

t /79. ~ y <= x -> x < y
proof.
H : y : x
/77 ; x ; y
/56-> ; y ; x
/60 ; x
qed.

t /80. ~ [ x < y & y <= x ]
proof.
H : x : y
/78 ; x ; y
qed.

t /81. S x <= y -> x < y
proof.
H : x : y
/56<- ; x ; y
/63 ; x
/73 ; x ; S x ; y
/55-> ; S x ; x
/21 ; x
qed.

schema T/83. mu A ( x ) <= x -> A ( mu A ( x ) )

schema T/84. A ( x ) -> mu A ( x ) <= x

schema T/85. A ( x ) -> A ( mu A ( x ) ) & mu A ( x ) <= x

schema T/86. mu A ( x ) <= x -> mu A ( x + w ) = mu A ( x )

schema T/87. mu A ( x ) <= x & x <= z -> mu A ( z ) = mu A ( x )

schema T/88. x <= b & A ( x ) -> exists x <= b A

schema T/89. exists x <= b A -> mu A ( b ) <= b & A ( mu A ( b ) )

schema T/90. forall x <= b A -> [ x <= b -> A ( x ) ]

schema T/91. exists x <= c A & c <= b -> exists x <= b A

schema T/92. forall x <= b A & c <= b -> forall x <= c A

schema T/93. A ( 0 ) & forall x' <= P x [ A ( x' ) -> A ( S x' ) ] -> A ( x )

schema T/94. A ( x ) -> [ y < mu A ( x ) -> ~ A ( y ) ]

schema T/95. A ( x ) -> forall y < mu A ( x ) [ ~ A ( y ) ]

schema T/96. A ( x ) -> mu A ( mu A ( x ) ) = mu A ( x )

t /97b. 0 + 0 = 0
proof.
H
/12 ; 0
qed.

t /97i. 0 + x = x -> 0 + S x = S x
proof.
H : x
/12 ; 0 ; x
qed.

t /97. 0 + x = x

t /98b. x + 0 = 0 + x
proof.
H : x
/12 ; x
/97 ; x
qed.

t /98i. x + y = y + x -> x + S y = S y + x
proof.
H : x : y
/12 ; x ; y
/12 ; y ; x
/14 ; y ; x
qed.

t /98. x + y = y + x

r /99. x * 0 = 0 & x * S y = x + x * y

t /100. x * 0 = 0 & x * S y = x * y + x
proof.
H : x : y
/99 ; x ; y
/98 ; x ; x * y
qed.

t /101b. x * ( y + 0 ) = x * y + x * 0
proof.
H : x : y
/12 ; y
/100 ; x
/12 ; x * y
qed.

t /101i. x * ( y + z ) = x * y + x * z -> x * ( y + S z ) = x * y + x * S z
proof.
H : x : y : z
/12 ; y ; z
/100 ; x ; z
/100 ; x ; y + z
/72 ; x * y ; x * z ; x
qed.

t /101. x * ( y + z ) = x * y + x * z

t /102b. x * ( y * 0 ) = ( x * y ) * 0
proof.
H : x : y
/100 ; y
/100 ; x
/100 ; x * y
qed.

t /102i. x * ( y * z ) = ( x * y ) * z -> x * ( y * S z ) = ( x * y ) * S z
proof.
H : x : y : z
/100 ; y ; z
/100 ; x * y ; z
/101 ; x ; y * z ; y
qed.

t /102. x * ( y * z ) = ( x * y ) * z

t /103b. 0 * 0 = 0
proof.
H
/100 ; 0
qed.

t /103i. 0 * x = 0 -> 0 * S x = 0
proof.
H : x
/100 ; 0 ; x
/12 ; 0
qed.

t /103. 0 * x = 0

t /104b. S x * 0 = x * 0 + 0
proof.
H : x
/100 ; S x
/100 ; x
/12 ; 0
qed.

t /104i. S x * y = x * y + y -> S x * S y = x * S y + S y
proof.
H : x : y
/100 ; x ; y
/100 ; S x ; y
/72 ; x * y ; x ; S y
/72 ; x * y ; y ; S x
/14 ; y ; x
/98 ; S y ; x
qed.

t /104. S x * y = x * y + y

t /105b. x * 0 = 0 * x
proof.
H : x
/100 ; x
/103 ; x
qed.

t /105i. x * y = y * x -> x * S y = S y * x
proof.
H : x : y
/100 ; x ; y
/104 ; y ; x
qed.

t /105. x * y = y * x

t /106. ( x + y ) * z = x * z + y * z
proof.
H : x : y : z
/105 ; x + y ; z
/101 ; z ; x ; y
/105 ; z ; x
/105 ; z ; y
qed.

t /107. x <= y -> x * z <= y * z
proof.
H : x : y : z
/68 ; x ; y
/106 ; x ; y -. x ; z
/71 ; x * z ; ( y -. x ) * z
qed.

t /108. x < y -> x + ( y -. x ) = y & y -. x != 0
proof.
H : x : y
/68 ; x ; y
/56-> ; x ; y
/12 ; x
qed.

t /109. x < S y -> x <= y
proof.
H : x : y
/108 ; x ; S y
/22 ; S y -. x
/12 ; x ; P ( S y -. x )
/4 ; x + P ( S y -. x ) ; y
/71 ; x ; P ( S y -. x )
qed.

t /110. x <= S y -> x <= y | x = S y
proof.
H : x : y
/61 ; x ; S y
/109 ; x ; y
qed.

t /111. ~ [ x < y & y < S x ]
proof.
H : x : y
/109 ; y ; x
/78 ; x ; y
qed.

t /112. x <= y -> S x <= S y
proof.
H : x : y
/68 ; x ; y
/12 ; x ; y -. x
/14 ; x ; y -. x
/71 ; S x ; y -. x
qed.

t /113. x < y -> S x < S y
proof.
H : x : y
/112 ; x ; y
/56-> ; x ; y
/56<- ; S x ; S y
/4 ; x ; y
qed.

t /114. x < y -> S x <= y
proof.
H : x : y
/108 ; x ; y
/22 ; y -. x
/14 ; x ; P ( y -. x )
/71 ; S x ; P ( y -. x )
qed.

e /115. 1 = S 0

e /116. 2 = S S 0

t /117. 1 * x = x
proof.
H : x
/115
/104 ; 0 ; x
/97 ; x
/103 ; x
qed.

t /118. 2 * x = x + x
proof.
H : x
/116
/115
/104 ; 1 ; x
/117 ; x
qed.

t /119b. y + 0 = z + 0 -> y = z
proof.
H : y : z
/12 ; y
/12 ; z
qed.

t /119i. [ y + x = z + x -> y = z ] -> [ y + S x = z + S x -> y = z ]
proof.
H : y : x : z
/12 ; y ; x
/12 ; z ; x
/4 ; y + x ; z + x
qed.

t /119. y + x = z + x -> y = z

t /120. x + y = x + z -> y = z
proof.
H : x : y : z
/98 ; x ; y
/98 ; x ; z
/119 ; y ; x ; z
qed.

t /121. y != 0 -> x < x + y
proof.
H : y : x
/71 ; x ; y
/56<- ; x ; x + y
/120 ; x ; 0 ; y
/12 ; x
qed.

t /122. x <= y & y < z -> x < z
proof.
H : x : y : z
/56-> ; y ; z
/73 ; x ; y ; z
/56<- ; x ; z
/80 ; y ; x
qed.

t /123. x < y -> y != 0
proof.
H : x : y
/56-> ; x ; y
/57 ; x
qed.

t /124. x < y -> S x < 2 * y
proof.
H : x : y
/118 ; y
/114 ; x ; y
/123 ; x ; y
/121 ; y ; y
/122 ; S x ; y ; y + y
qed.

t /125. x < S x
proof.
H : x
/59 ; x
/79 ; S x ; x
qed.

r /126. x ^ 0 = 1 & x ^ S y = x * ( x ^ y )

t /127b. 0 < 2 ^ 0
proof.
H
/116
/115
/126 ; 2
/125 ; 0
qed.

t /127i. x < 2 ^ x -> S x < 2 ^ S x
proof.
H : x
/126 ; 2 ; x
/124 ; x ; 2 ^ x
qed.

t /127. x < 2 ^ x

t /128. x <= 2 ^ x
proof.
H : x
/127 ; x
/56-> ; x ; 2 ^ x
qed.

d /129. q is_power_of_two <-> exists x <= q [ 2 ^ x = q ]

t /130. 1 is_power_of_two
proof.
H
/115
/129<- ; 1 ; 0
/128 ; 0
/126 ; 2
qed.

t /131. 2 ^ x is_power_of_two
proof.
H : x
/116
/129<- ; 2 ^ x ; x
/128 ; x
/5 ; 2 ^ x
qed.

t /132. x * y = 0 -> x = 0 | y = 0
proof.
H : x : y
/22 ; y
/99 ; x ; P y
/15 ; x ; x * P y
qed.

t /133b. 2 ^ 0 != 0
proof.
H
/116
/115
/126 ; 2
/3 ; 1
qed.

t /133i. 2 ^ x != 0 -> 2 ^ S x != 0
proof.
H : x
/116
/115
/126 ; 2 ; x
/132 ; 2 ; 2 ^ x
/3 ; 1
qed.

t /133. 2 ^ x != 0

t /134. ~ 0 is_power_of_two
proof.
H
/129-> ; 0 : x
/133 ; x
qed.

t /135. q is_power_of_two -> 2 * q is_power_of_two
proof.
H : q
/129-> ; q : x
/129<- ; 2 * q ; S x
/126 ; 2 ; x
/128 ; S x
qed.

t /136b. x ^ ( y + 0 ) = ( x ^ y ) * ( x ^ 0 )
proof.
H : x : y
/12 ; y
/126 ; x
/117 ; x ^ y
/105 ; x ^ y ; 1
qed.

t /136i. x ^ ( y + z ) = ( x ^ y ) * ( x ^ z ) -> x ^ ( y + S z ) = ( x ^ y ) * ( x ^ S z )
proof.
H : x : y : z
/12 ; y ; z
/126 ; x ; y + z
/126 ; x ; z
/102 ; x ; x ^ y ; x ^ z
/102 ; x ^ y ; x ; x ^ z
/105 ; x ; x ^ y
qed.

t /136. x ^ ( y + z ) = ( x ^ y ) * ( x ^ z )

t /137. x != 0 -> x < 2 * x
proof.
H : x
/22 ; x
/125 ; P x
/124 ; P x ; x
qed.

t /138. 0 <= x
proof.
H : x
/97 ; x
/71 ; 0 ; x
qed.

t /139. x != 0 -> 1 <= x
proof.
H : x
/116
/115
/22 ; x
/138 ; P x
/112 ; 0 ; P x
qed.

t /140. x != 0 -> 2 <= 2 ^ x
proof.
H : x
/116
/115
/127 ; x
/114 ; x ; 2 ^ x
/139 ; x
/112 ; 1 ; x
/73 ; 2 ; S x ; 2 ^ x
qed.

t /141a. x * z = y * z & x < y & z != 0 -> x = y
proof.
H : x : z : y
/108 ; x ; y
/106 ; x ; y -. x ; z
/132 ; y -. x ; z
/12 ; x * z
/120 ; x * z ; 0 ; ( y -. x ) * z
qed.

t /141. x * z = y * z & z != 0 -> x = y
proof.
H ; x ; z ; y
/141a ; x ; z ; y
/141a ; y ; z ; x
/77 ; x ; y
qed.

t /142. x <= y -> z * x <= z * y
proof.
H :x : y : z
/107 ; x ; y ; z
/105 ; z ; x
/105 ; z ; y
qed.

t /143. x != 0 -> x < x * 2
proof.
H : x
/137 ; x
/105 ; x ; 2
qed.

t /144. x < y & y <= z -> x < z
proof.
H : x : y : z
/56-> ; x ; y
/73 ; x ; y ; z
/56<- ; x ; z
/80 ; x ; y
qed.

t /145. x < y -> 2 ^ x < 2 ^ y
proof.
H : x : y
/108 ; x ; y
/136 ; 2 ; x ; y -. x
/140 ; y -. x
/142 ; 2 ; 2 ^ ( y -. x ) ; 2 ^ x
/133 ; x
/143 ; 2 ^ x
/144 ; 2 ^ x ; ( 2 ^ x ) * 2 ; 2 ^ y
qed.

t /146. x <= y -> 2 ^ x <= 2 ^ y
proof.
H : x : y
/61 ; x ; y
/145 ; x ; y
/56-> ; 2 ^ x ; 2 ^ y
/60 ; 2 ^ x
qed.

t /147. 2 ^ x < 2 ^ y -> x < y
proof.
H : x : y
/77 ; x ; y
/56-> ; 2 ^ x ; 2 ^ y
/145 ; y ; x
/80 ; 2 ^ x ; 2 ^ y
/56-> ; 2 ^ y ; 2 ^ x
qed.

t /148a. 2 ^ x = 2 ^ y -> ~ x < y
proof.
H : x : y
/145 ; x ; y
/56-> ; 2 ^ x ; 2 ^ y
qed.

t /148. 2 ^ x = 2 ^ y -> x = y
proof.
H : x : y
/148a ; x ; y
/148a ; y ; x
/77 ; x ; y
qed.

t /149. ~ [ q is_power_of_two & q' is_power_of_two & q < q' & q' < 2 * q ]
proof.
H : q : q'
/135 ; q
/129-> ; q : x
/129-> ; q' : y
/129-> ; 2 * q : z
/126 ; 2 ; x
/147 ; x ; y
/147 ; y ; z
/148 ; S x ; z
/111 ; x ; y
qed.

d /150. p150 ( q , x ) <-> q is_power_of_two & q <= S x & S x < 2 * q

t /151a. p150 ( q , x ) & p150 ( q' , x ) -> ~ q < q'
proof.
H : q : x : q'
/150-> ; q ; x
/150-> ; q' ; x
/149 ; q ; q'
/122 ; q' ; S x ; 2 * q
/56-> ; q ; q'
qed.

t /151. p150 ( q , x ) & p150 ( q' , x ) -> q = q'
proof.
H : q : x : q'
/151a ; q ; x ; q'
/151a ; q' ; x ; q
/77 ; q ; q'
qed.

t /152. p150 ( q , x ) & S S x < 2 * q -> p150 ( q , S x )
proof.
H : q : x
/150-> ; q ; x
/150<- ; q ; S x
/63 ; S x
/73 ; q ; S x ; S S x
qed.

t /153. p150 ( q , x ) & ~ S S x < 2 * q -> p150 ( 2 * q , S x )
proof.
H : q : x
/150-> ; q ; x
/150<- ; 2 * q ; S x
/135 ; q
/124 ; S x ; 2 * q
/114 ; S x ; 2 * q
/56<- ; S S x ; 2 * q
/60 ; S S x
qed.

t /154. x <= y -> x <= S y
proof.
H : x : y
/63 ; y
/73 ; x ; y ; S y
qed.

t /155. p150 ( q , x ) -> exists q1 <= S S x [ p150 ( q1 , S x ) ]
proof.
H : q : x ^A
/^A ; q
/^A ; 2 * q
/152 ; q ; x
/153 ; q ; x
/150-> ; q ; x
/150-> ; 2 * q ; S x
/154 ; q ; S x
qed.

t /156b. exists q <= 1 [ p150 ( q , 0 ) ]
proof.
H ; 1
/116
/115
/150<- ; 1 ; 0
/130
/60 ; 1
/3 ; 0
/137 ; 1
qed.

t /156i. exists q <= S x [ p150 ( q , x ) ] -> exists q1 <= S S x [ p150 ( q1 , S x ) ]
proof.
H : x : q ^A
/155 ; q ; x : q1
/^A ; q1
qed.

t /156. exists q <= S x [ p150 ( q , x ) ]

d /157. Q x = q <-> p150 ( q , x )
ucec /151 /156

t /158. Q x is_power_of_two & Q x <= S x & S x < 2 * Q x
proof.
H : x
/157-> ; x ; Q x
/150-> ; Q x ; x
/5 ; Q x
qed.

t /159. q is_power_of_two & q <= S x & S x < 2 * q -> q = Q x
proof.
H : q : x
/150<- ; q ; x
/157<- ; x ; q
qed.

e /160. R x = S x -. Q x

t /161. S x = Q x + R x
proof.
H : x
/158 ; x
/160 ; x
/68 ; Q x ; S x
qed.

t /162. x < y -> exists w <= y [ x + w = y & w != 0 ]
proof.
H : x : y ; y -. x
/108 ; x ; y
/98 ; x ; y -. x
/71 ; y -. x ; x
qed.

t /163. x + y = z & y != 0 -> x < z
proof.
H : x : y : z
/56<- ; x ; z
/71 ; x ; y
/12 ; x
/120 ; x ; y ; 0
qed.

t /164. x + y < x + z -> y < z
proof.
H : x : y : z
/162 ; x + y ; x + z : w
/72 ; x ; y ; w
/120 ; x ; y + w ; z
/163 ; y ; w ; z
qed.

t /165. R x < Q x
proof.
H : x
/161 ; x
/158 ; x
/118 ; Q x
/164 ; Q x ; R x ; Q x
qed.

t /166. S x = Q x + R x & Q x is_power_of_two & R x < Q x
proof.
H : x
/161 ; x
/158 ; x
/165 ; x
qed.

t /167. x <= y -> exists w <= y [ x + w = y ]
proof.
H : x : y ; y -. x
/68 ; x ; y
/98 ; x ; y -. x
/71 ; y -. x ; x
qed.

t /168. x + y <= x + z -> y <= z
proof.
H : x : y : z
/167 ; x + y ; x + z : w
/72 ; x ; y ; w
/120 ; x ; y + w ; z
/71 ; y ; w
qed.

t /169. x + y <= x + z -> y <= z
proof.
H : x : y : z
/167 ; x + y ; x + z : w
/72 ; x ; y ; w
/120 ; x ; y + w ; z
/71 ; y ; w
qed.

t /170. x < y -> x + z < y + z
proof.
H : x : y : z
/79 ; y + z ; x + z
/98 ; y ; z
/98 ; x ; z
/168 ; z ; y ; x
/80 ; x ; y
qed.

t /171. S x = q + r & q is_power_of_two & r < q -> q = Q x & r = R x
proof.
H : x : q : r
/71 ; q ; r
/118 ; q
/98 ; q ; r
/170 ; r ; q ; q
/159 ; q ; x
/120 ; Q x ; r ; R x
/161 ; x
qed.

e /172. x (+) y = P ( S x * Q y + R y )

t /173. x != 0 & y < z -> y < x * z
proof.
H : x : y : z
/22 ; x
/104 ; P x ; z
/98 ; P x * z ; z
/71 ; z ; P x * z
/144 ; y ; z ; x * z
qed.

t /174. x < y -> z + x < z + y
proof.
H : x : y : z
/98 ; z ; x
/98 ; z ; y
/170 ; x ; y ; z
qed.

t /175. r < q & r' < q' -> r * q' + r' < q * q'
proof.
H : r : q : r' : q'
/162 ; r ; q : w
/162 ; r' ; q' : w'
/101 ; r ; r' ; w'
/106 ; r ; w ; r' + w'
/173 ; w ; r' ; q'
/174 ; r' ; w * q' ; r * r' + r * w'
qed.

t /176. R x * Q y + R y < Q x * Q y
proof.
H : x : y
/166 ; x
/166 ; y
/175 ; R x ; Q x ; R y ; Q y
qed.

t /177. q1 is_power_of_two & q2 is_power_of_two -> q1 * q2 is_power_of_two
proof.
H : q1 : q2
/129-> ; q1 : x1
/129-> ; q2 : x2
/136 ; 2 ; x1 ; x2
/131 ; x1 + x2
qed.

t /178. Q x != 0
proof.
H : x
/158 ; x
/134
qed.

t /179. S ( x (+) y ) = S x * Q y + R y
proof.
H ; x ; y
/172 ; x ; y
/22 ; S x * Q y + R y
/15 ; S x * Q y ; R y
/3 ; x
/178 ; y
/132 ; S x ; Q y
qed.

t /180. Q ( x (+) y ) = Q x * Q y & R ( x (+) y ) = R x * Q y + R y
proof.
H : x : y
/179 ; x ; y
/166 ; x
/166 ; y
/106 ; Q x ; R x ; Q y
/72 ; Q x * Q y ; R x * Q y ; R y
/177 ; Q x ; Q y
/176 ; x ; y
/171 ; x (+) y ; Q x * Q y ; R x * Q y + R y
qed.

t /181. Q ( x (+) ( y (+) z ) ) = Q ( ( x (+) y ) (+) z )
proof.
H : x : y : z
/180 ; y ; z
/180 ; x ; y
/180 ; x ; y (+) z
/180 ; x (+) y ; z
/102 ; Q x ; Q y ; Q z
qed.

t /182. R ( x (+) ( y (+) z ) ) = R ( ( x (+) y ) (+) z )
proof.
H : x : y : z
/180 ; y ; z
/180 ; x ; y
/180 ; x ; y (+) z
/180 ; x (+) y ; z
/102 ; R x ; Q y ; Q z
/106 ; R x * Q y ; R y ; Q z
/72 ; R x * Q y * Q z ; R y * Q z ; R z
qed.

t /183. x (+) ( y (+) z ) = ( x (+) y ) (+) z
proof.
H : x : y : z
/181 ; x ; y ; z
/182 ; x ; y ; z
/166 ; x (+) ( y (+) z )
/166 ; ( x (+) y ) (+) z
/4 ; ( x (+) y ) (+) z ; x (+) ( y (+) z )
qed.

t /184. x1 <= y1 & x2 <= y2 -> x1 + x2 <= y1 + y2
proof.
H : x1 : y1 : x2 : y2
/167 ; x1 ; y1 : w1
/167 ; x2 ; y2 : w2
/72 ; x1 ; w1 ; x2 + w2
/72 ; w1 ; x2 ; w2
/98 ; w1 ; x2
/72 ; x2 ; w1 ; w2
/72 ; x1 ; x2 ; w1 + w2
/71 ; x1 + x2 ; w1 + w2
qed.

e /185. eps = 0

e /186. b0 = 1

e /187. b1 = 2

t /188. b0 != eps & b1 != eps & b0 != b1
proof.
H
/116
/115
/185
/186
/187
/3 ; 0
/3 ; 1
/4 ; 0 ; 1
qed.

t /189. Q eps = 1 & R eps = 0
proof.
H
/116
/115
/185
/12 ; 1
/125 ; 0
/130
/171 ; 0 ; 1 ; 0
qed.

t /190. 2 is_power_of_two
proof.
H
/116
/115
/131 ; 1
/126 ; 2 ; 0
/117 ; 2
/105 ; 2 ; 1
qed.

t /191. Q b0 = 2 & R b0 = 0
proof.
H
/116
/115
/186
/12 ; 2
/190
/125 ; 0
/125 ; 1
/56-> ; 0 ; 1
/122 ; 0 ; 1 ; 2
/171 ; 1 ; 2 ; 0
qed.

t /192. Q b1 = 2 & R b1 = 1
proof.
H
/116
/115
/187
/12 ; 2 ; 0
/190
/125 ; 1
/171 ; 2 ; 2 ; 1
qed.

t /193. Q x = Q y & R x = R y -> x = y
proof.
H : x : y
/166 ; x
/166 ; y
/4 ; x ; y
qed.

t /194. eps (+) x = x
proof.
H : x
/193 ; eps (+) x ; x
/189
/180 ; eps ; x
/117 ; Q x
/103 ; Q x
/97 ; R x
qed.

t /195. x * 1 = x
proof.
H : x
/117 ; x
/105 ; x ; 1
qed.

t /196. x (+) eps = x
proof.
H : x
/193 ; x (+) eps ; x
/189
/180 ; x ; eps
/195 ; Q x
/195 ; R x
/12 ; R x
qed.

t /197. y (+) x = z (+) x -> y = z
proof.
H : y : x : z
/180 ; y ; x
/180 ; z ; x
/178 ; x
/141 ; Q y ; Q x ; Q z
/119 ; R y * Q x ; R x ; R z * Q x
/141 ; R y ; Q x ; R z
/193 ; y ; z
qed.

t /198. x * y = x * z & x != 0 -> y = z
proof.
H : x : y : z
/105 ; x ; y
/105 ; x ; z
/141 ; y ; x ; z
qed.

t /199. x (+) y = x (+) z -> y = z
proof.
H : x : y : z
/180 ; x ; y
/180 ; x ; z
/178 ; x
/198 ; Q x ; Q y ; Q z
/120 ; R x * Q y ; R y ; R z
/193 ; y ; z
qed.

t /200. x <= 1 -> x = 0 | x = 1
proof.
H : x
/116
/115
/167 ; x ; 1 : w
/22 ; w
/12 ; x ; P w
/4 ; x + P w ; 0
/15 ; x ; P w
qed.

t /201. x != 0 -> y <= x * y
proof.
H : x : y
/22 ; x
/104 ; P x ; y
/98 ; P x * y ; y
/71 ; y ; P x * y
qed.

t /202. x * y = 1 -> x = 1 & y = 1
proof.
H : x : y
/116
/115
/103 ; y
/105 ; x ; y
/103 ; x
/201 ; x ; y
/201 ; y ; x
/200 ; x
/200 ; y
/3 ; 0
qed.

t /203. Q x = 1 -> x = eps
proof.
H : x
/116
/115
/185
/12 ; 1
/166 ; x
/200 ; R x
/56-> ; R x ; 1
/4 ; x ; 0
qed.

t /204. x (+) y = eps -> x = eps & y = eps
proof.
H : x : y
/180 ; x ; y
/189
/202 ; Q x ; Q y
/203 ; x
/203 ; y
qed.

r /205. Parity 0 = 0 & Parity S x = C ( Parity x , 1 , 0 )

t /206. Parity x = 0 -> Parity S x = 1
proof.
H : x
/205 ; x
/33 ; 1 ; 0 ; 0
qed.

t /207. Parity x = 1 -> Parity S x = 0
proof.
H : x
/116
/115
/205 ; x
/33 ; 1 ; 0 ; 0
qed.

t /208. Parity 0 = 0 & Parity 1 = 1 & Parity 2 = 0 & Parity eps = 0 & Parity b0 = 1 & Parity b1 = 0
proof.
H
/116
/115
/205 ; 0
/205 ; 1
/185
/186
/187
/33 ; 1 ; 0; 0
qed.

t /209. Parity x = 0 | Parity x = 1
proof.
H : x
/116
/115
/205 ; x
/205 ; P x
/22 ; x
/39 ; Parity P x
qed.

t /210b. Parity x = 0 -> Parity ( x + 0 ) = Parity 0
proof.
H : x
/208
/12 ; x
qed.

t /210i. [ Parity x = 0 -> Parity ( x + y ) = Parity y ] -> [ Parity x = 0 -> Parity ( x + S y ) = Parity S y ]
proof.
H : x : y
/12 ; x ; y
/205 ; x + y
/205 ; y
qed.

t /210. Parity x = 0 -> Parity ( x + y ) = Parity y

t /211b. Parity x = 0 -> Parity ( x * 0 ) = 0
proof.
H : x
/100 ; x
/205
qed.

t /211i. [ Parity x = 0 -> Parity ( x * y ) = 0 ] -> [ Parity x = 0 -> Parity ( x * S y ) = 0 ]
proof.
H : x : y
/99 ; x ; y
/210 ; x ; x * y
qed.

t /211. Parity x = 0 -> Parity ( x * y ) = 0

t /212. Parity ( x * 2 + y ) = Parity y
proof.
H : x : y
/208
/105 ; x ; 2
/211 ; 2 ; x
/210 ; 2 * x ; y
qed.

t /213. Parity ( x * 2 ) = 0
proof.
H : x
/212 ; x ; 0
/208
/12 ; x * 2
qed.

t /214. Parity ( x * 2 + 1 ) = 1
proof.
H : x
/212 ; x ; 1
/208
qed.

t /215. Parity R ( x (+) b0 ) = 0
proof.
H : x
/180 ; x ; b0
/191
/212 ; R x ; 0
/205
qed.

t /216. Parity R ( x (+) b1 ) = 1
proof.
H : x
/180 ; x ; b1
/192
/212 ; R x ; 1
/208
qed.

t /217. x (+) b0 != y (+) b1
proof.
H : x : y
/116
/115
/215 ; x
/216 ; y
/3 ; 0
qed.

r /218. Half 0 = 0 & Half S x = C ( Parity x , Half x , S Half x )

t /219. Parity x = 0 -> Half S x = Half x
proof.
H : x
/218 ; x
/33 ; Half x ; S Half x
qed.

t /220. Parity x = 1 -> Half S x = S Half x
proof.
H : x
/116
/115
/218 ; x
/33 ; Half x ; S Half x; 0
qed.

t /221. Half 0 = 0 & Half 1 = 0 & Half 2 = 1 & Half S 2 = 1
proof.
H
/218 ; 0
/218 ; 1
/218 ; 2
/208
/219 ; 2
/33 ; 0 ; 1 ; 0
/33 ; 0 ; 2 ; 1
/33 ; 1 ; 2 ; 0
qed.

d /222. p222 ( x ) <-> [ Parity x = 0 -> x = 2 * Half x ] & [ Parity x = 1 -> x = 2 * Half x + 1 ]

t /223b. p222 ( 0 )
proof.
H
/116
/115
/222<- ; 0
/205
/221
/99 ; 2
/3 ; 0
qed.

t /223i. p222 ( x ) -> p222 ( S x )
proof.
H : x
/116
/115
/222-> ; x
/222<- ; S x
? Parity x = 1
/209 ; x
/3 ; 0
/12 ; 2 * Half x ; 0
/206 ; x
/207 ; x
/219 ; x
/220 ; x
/12 ; 2 * Half x ; 1
/100 ; 2 ; Half x
qed.

t /223. p222 ( x )

t /224. Parity x = 0 -> x = 2 * Half x
proof.
H : x
/223 ; x
/222-> ; x
qed.

t /225. Parity x = 1 -> x = 2 * Half x + 1
proof.
H : x
/223 ; x
/222-> ; x
qed.

t /226. x <= 2 * Half x + 1
proof.
H : x
/224 ; x
/225 ; x
/71 ; 2 * Half x ; 1
/209 ; x
/60 ; x
qed.

t /227. Half x = 0 -> x = 0 | x = 1
proof.
H : x
/226 ; x
/100 ; 2
/97 ; 1
/200 ; x
qed.

t /228. x != eps -> Half Q x + Half R x != 0
proof.
H : x
/15 ; Half Q x ; Half R x
/227 ; Q x
/178 ; x
/203 ; x
qed.

e /229. Chop x = P ( Half Q x + Half R x )

t /230. Chop eps = eps
proof.
H
/229 ; eps
/189
/185
/221
/12 ; 0
/16
qed.

t /231. x != eps -> S Chop x = Half Q x + Half R x
proof.
H : x
/229 ; x
/228 ; x
/22 ; Half Q x + Half R x
qed.

t /232. 2 * Half x <= x
proof.
H : x
/224 ; x
/225 ; x
/60 ; x
/71 ; 2 * Half x ; 1
/209 ; x
qed.

t /233. Parity q = 0 & r < q -> Half r < Half q
proof.
H : q : r
/79 ; Half q ; Half r
/224 ; q
/118 ; Half q
/184 ; Half q ; Half r ; Half q ; Half r
/232 ; r
/118 ; Half r
/73 ; q ; Half r + Half r ; r
/80 ; r ; q
qed.

t /234. Parity ( 2 ^ S x ) = 0
proof.
H : x
/126 ; 2 ; x
/208
/211 ; 2 ; 2 ^ x
qed.

t /235. Half ( 2 ^ S x ) = 2 ^ x
proof.
H : x
/116
/115
/234 ; x
/224 ; 2 ^ S x
/126 ; 2 ; x
/3 ; 1
/198 ; 2 ; Half ( 2 ^ S x ) ; 2 ^ x
qed.

t /236. q is_power_of_two & q != 1 -> Parity q = 0
proof.
H : q
/129-> ; q : x
/126 ; 2 ; x
/22 ; x
/134
/234 ; P x
qed.

t /237. x != 0 -> Half ( 2 ^ x ) is_power_of_two
proof.
H ; x
/116
/115
/22 ; x
/235 ; P x
/131 ; P x
qed.

t /238. x != eps -> Half Q x is_power_of_two
proof.
H : x
/158 ; x
/116
/115
/129-> ; Q x : y
/126 ; 2
/203 ; x
/237 ; y
qed.

t /239. x != eps -> Q Chop x = Half Q x & R Chop x = Half R x
proof.
H : x
/171 ; Chop x ; Half Q x ; Half R x
/231 ; x
/238 ; x
/236 ; Q x
/166 ; x
/203 ; x
/233 ; Q x ; R x
qed.

t /240. Chop b0 = eps & Chop b1 = eps
proof.
H
/239 ; b0
/239 ; b1
/188
/191
/192
/221
/203 ; Chop b0
/203 ; Chop b1
qed.

t /241b. Half ( 0 * 2 + 1 ) = 0 & Half ( 0 * 2 ) = 0
proof.
H
/103 ; 2
/97 ; 1
/221
qed.

t /241i. Half ( x * 2 + 1 ) = x & Half ( x * 2 ) = x -> Half ( S x * 2 + 1 ) = S x & Half ( S x * 2 ) = S x
proof.
H : x
/116
/115
/104 ; x ; 2
/12 ; x * 2 ; 1
/212 ; x ; 1
/208
/220 ; x * 2 + 1
/12 ; x * 2 + 2 ; 0
/12 ; S ( x * 2 + 2 )
/212 ; x ; 2
/219 ; x * 2 + 2
qed.

t /241. Half ( x * 2 + 1 ) = x & Half ( x * 2 ) = x

t /242. x (+) b0 != eps & x (+) b1 != eps
proof.
H : x
/204 ; x ; b0
/204 ; x ; b1
/188
qed.

t /243. Chop ( x (+) b0 ) = x
proof.
H : x
/242 ; x
/239 ; x (+) b0
/180 ; x ; b0
/191
/241 ; Q x
/241 ; R x
/12 ; R x * 2
/193 ; x ; Chop ( x (+) b0 )
qed.

t /244. Chop ( x (+) b1 ) = x
proof.
H : x
/242 ; x
/239 ; x (+) b1
/180 ; x ; b1
/192
/241 ; Q x
/241 ; R x
/12 ; R x * 2
/193 ; x ; Chop ( x (+) b1 )
qed.

t /245. x != eps -> Q ( Chop x (+) b0 ) = Q x & Q ( Chop x (+) b1 ) = Q x
proof.
H : x
/180 ; Chop x ; b0
/180 ; Chop x ; b1
/191
/192
/158 ; x
/203 ; x
/236 ; Q x
/224 ; Q x
/239 ; x
/105 ; 2 ; Q Chop x
qed.

t /246. Parity x = Parity y & Half x = Half y -> x = y
proof.
H : x : y
/224 ; x
/224 ; y
/225 ; x
/225 ; y
/221
/209 ; x
? Parity x = 0
qed.

t /247. x != eps -> R ( Chop x (+) b0 ) = Half R x * 2
proof.
H : x
/180 ; Chop x ; b0
/191
/12 ; R Chop x * 2
/239 ; x
qed.

t /248. x != eps & Parity R x = 0 -> R ( Chop x (+) b0 ) = R x
proof.
H : x
/247 ; x
/241 ; Half R x
/213 ; Half R x
/246 ; R ( Chop x (+) b0 ) ; R x
qed.

t /249. x != eps -> R ( Chop x (+) b1 ) = Half R x * 2 + 1
proof.
H : x
/180 ; Chop x ; b1
/192
/239 ; x
qed.

t /250. x != eps & Parity R x = 1 -> R ( Chop x (+) b1 ) = R x
proof.
H : x
/249 ; x
/241 ; Half R x
/214 ; Half R x
/246 ; R ( Chop x (+) b1 ) ; R x
qed.

t /251. x != eps & Parity R x = 0 -> x = Chop x (+) b0
proof.
H : x
/245 ; x
/248 ; x
/193 ; x ; Chop x (+) b0
qed.

t /252. x != eps & Parity R x = 1 -> x = Chop x (+) b1
proof.
H : x
/245 ; x
/250 ; x
/193 ; x ; Chop x (+) b1
qed.

t /253. x != eps -> x = Chop x (+) b0 | x = Chop x (+) b1
proof.
H : x
/251 ; x
/252 ; x
/209 ; R x
qed.

t /254. y != eps -> Chop ( x (+) y ) = x (+) Chop y
proof.
H : y : x
/253 ; y
/183 ; x ; Chop y ; b0
/183 ; x ; Chop y ; b1
/243 ; x (+) Chop y
/244 ; x (+) Chop y
qed.

t /255. x < x (+) b0
proof.
H : x
/172 ; x ; b0
/191
/12 ; S x * 2
/105 ; S x ; 2
/118 ; S x
/12 ; S x ; x
/16 ; S x + x
/71 ; S x ; x
/125 ; x
/144 ; x ; S x ; S x + x
qed.

t /256. x + 1 = S x
proof.
H : x
/115
/12 ; x ; 0
qed.

t /257. x < x (+) b1
proof.
H : x
/172 ; x ; b1
/192
/256 ; S x * 2
/16 ; S x * 2
/105 ; S x ; 2
/118 ; S x
/125 ; x
/71 ; S x ; S x
/144 ; x ; S x ; S x + S x
qed.

t /258. x != eps -> Chop x < x
proof.
H : x
/253 ; x
/255 ; Chop x
/257 ; Chop x
qed.

r /259. Length eps = 0 & Length ( x (+) b0 ) = S Length x & Length ( x (+) b1 ) = S Length x

t /260b. Length ( x (+) eps ) = Length x + Length eps
proof.
H : x
/196 ; x
/259
/12 ; Length x
qed.

t /260ij. Length ( x (+) y ) = Length x + Length y -> Length ( x (+) ( y (+) b0 ) ) = Length x + Length ( y (+) b0 ) & Length ( x (+) ( y (+) b1 ) ) = Length x + Length ( y (+) b1 )
proof.
H : x : y
/259 ; y
/183 ; x ; y ; b0
/183 ; x ; y ; b1
/259 ; x (+) y
/12 ; Length x ; Length y
qed.

t /260. Length ( x (+) y ) = Length x + Length y

t /261b. Q eps = 2 ^ ( Length eps )
proof.
H
/259
/126 ; 2
/189
qed.

t /261ij. Q x = 2 ^ Length x -> Q ( x (+) b0 ) = 2 ^ Length ( x (+) b0 ) & Q ( x (+) b1 ) = 2 ^ Length ( x (+) b1 )
proof.
H : x
/259 ; x
/126 ; 2 ; Length x
/180 ; x ; b0
/180 ; x ; b1
/191
/192
/105 ; Q x ; 2
qed.

t /261. Q x = 2 ^ Length x

t /262. x <= S y -> x <= y | x = S y
proof.
H : x : y
/68 ; x ; S y
/22 ; S y -. x
/12 ; x ; P ( S y -. x )
/4 ; y ; x + P ( S y -. x )
/71 ; x ; P ( S y -. x )
qed.

t /263b. x <= 0 -> 2 ^ x <= 2 ^ 0
proof.
H : x
/57 ; x
/60 ; 2 ^ 0
qed.

t /263i. [ x <= y -> 2 ^ x <= 2 ^ y ] -> [ x <= S y -> 2 ^ x <= 2 ^ S y ]
proof.
H : x : y
/262 ; x ; y
/60 ; 2 ^ x
/126 ; 2 ; y
/118 ; 2 ^ y
/71 ; 2 ^ y ; 2 ^ y
/73 ; 2 ^ x ; 2 ^ y ; 2 * ( 2 ^ y )
qed.

t /263. x <= y -> 2 ^ x <= 2 ^ y

d /264. x pre<= y <-> Length x <= Length y

d /265. x pre< y <-> Length x < Length y

t /266. x <= y -> 2 * x <= 2 * y
proof.
H : x : y
/118 ; x
/118 ; y
/184 ; x ; y ; x ; y
qed.

t /267. x pre<= y -> x <= 2 * Q y
proof.
H : x : y
/264-> ; x ; y
/263 ; Length x ; Length y
/261 ; x
/261 ; y
/158 ; x
/63 ; x
/56-> ; S x ; 2 * Q x
/73 ; x ; S x ; 2 * Q x
/266 ; Q x ; Q y
/73 ; x ; 2 * Q x ; 2 * Q y
qed.

pragma bounding pre<= 2 * Q @b by /267

t /268. S R x < Q x -> Q S x = Q x
proof.
H : x
/166 ; x
/12 ; Q x ; R x
/171 ; S x ; Q x ; S R x
qed.

t /269. q is_power_of_two -> 0 < q
proof.
H : q
/134
/58 ; q
/56<- ; 0 ; q
qed.

t /270. S R x = Q x -> Q S x = 2 * Q x
proof.
H : x
/166 ; x
/190
/177 ; 2 ; Q x
/12 ; Q x ; R x
/118 ; Q x
/269 ; 2 * Q x
/12 ; 2 * Q x
/171 ; S x ; 2 * Q x ; 0
qed.

t /271. Q x <= Q S x
proof.
H : x
/60 ; Q x
/268 ; x
/166 ; x
/270 ; x
/118 ; Q x
/71 ; Q x ; Q x
/114 ; R x ; Q x
/56<- ; S R x ; Q x
qed.

t /272b. x <= 0 -> Q x <= Q 0
proof.
H : x
/57 ; x
/60 ; Q 0
qed.

t /272i. [ x <= y -> Q x <= Q y ] -> [ x <= S y -> Q x <= Q S y ]
proof.
H : x : y
/110 ; x ; y
/60 ; Q S y
/271 ; y
/73 ; Q x ; Q y ; Q S y
qed.

t /272. x <= y -> Q x <= Q y

t /273. x pre< y -> x < y
proof.
H : x : y
/265-> ; x ; y
/145 ; Length x ; Length y
/261 ; x
/261 ; y
/272 ; y ; x
/80 ; Q x ; Q y
/79 ; y ; x
qed.

t /274. eps pre<= x & x pre<= x
proof.
H : x
/264<- ; eps ; x
/264<- ; x ; x
/259
/58 ; Length x
/60 ; Length x
qed.

t /275. x pre<= y & y pre<= z -> x pre<= z
proof.
H : x : y : z
/264-> ; x ; y
/264-> ; y ; z
/73 ; Length x ; Length y ; Length z
/264<- ; x ; z
qed.

t /276. x (+) y pre<= y (+) x
proof.
H : x : y
/260 ; x ; y
/260 ; y ; x
/98 ; Length x ; Length y
/60 ; Length x + Length y
/264<- ; x (+) y ; y (+) x
qed.

t /277. x pre<= x (+) y & y pre<= x (+) y
proof.
H : x : y
/264<- ; x ; x (+) y
/264<- ; y ; x (+) y
/260 ; x ; y
/71 ; Length x ; Length y
/98 ; Length x ; Length y
/71 ; Length y ; Length x
qed.

t /278. Length b0 = 1 & Length b1 = 1
proof.
H
/259 ; eps
/194 ; b0
/194 ; b1
/115
qed.

t /000b. x1 (+) eps = x2 (+) eps -> x1 = x2
proof.
H : x1 : x2
/196 ; x1
/196 ; x2
qed.

t /000i. [ x1 (+) y = x2 (+) y -> x1 = x2 ] -> [ x1 (+) y (+) b0 = x2 (+) y (+) b0 -> x1 = x2 ]
proof.
H : x1 : y : x2
/183 ; x1 ; y ; b0
/183 ; x2 ; y ; b0
/243 ; x1 (+) y
/243 ; x2 (+) y
qed.

t /000j. [ x1 (+) y = x2 (+) y -> x1 = x2 ] -> [ x1 (+) y (+) b1 = x2 (+) y (+) b1 -> x1 = x2 ]
proof.
H : x1 : y : x2
/183 ; x1 ; y ; b1
/183 ; x2 ; y ; b1
/244 ; x1 (+) y
/244 ; x2 (+) y
qed.

t /000. x1 (+) y = x2 (+) y -> x1 = x2

t /001. Length x = 0 -> x = eps
proof.
H : x
/253 ; x
/260 ; Chop x ; b0
/260 ; Chop x ; b1
/278
/15 ; Length Chop x ; 1
/115
/3 ; 0
qed.

d /288. x ends_with c <-> exists a pre<= x [ x = a (+) c ]

t /289. a (+) c ends_with c
proof.
H : a : c
/277 ; a ; c
/288<- ; a (+) c ; c ; a
/5 ; a (+) c
qed.

d /290. x begins_with a <-> exists c pre<= x [ x = a (+) c ]

t /291. a (+) c begins_with a
proof.
H : a : c
/277 ; a ; c
/290<- ; a (+) c ; a ; c
/5 ; a (+) c
qed.

t /292. x begins_with a -> x (+) y begins_with a
proof.
H : x : a : y
/290-> ; x ; a : c
/183 ; a ; c ; y
/291 ; a ; c (+) y
qed.

t /293. y ends_with c -> x (+) y ends_with c
proof.
H : y : c : x
/288-> ; y ; c : a
/183 ; x ; a ; c
/289 ; x (+) a ; c
qed.

t /294. x ends_with x & x ends_with eps & x begins_with x & x begins_with eps
proof.
H : x
/194 ; x
/196 ; x
/289 ; eps ; x
/289 ; x ; eps
/291 ; eps ; x
/291 ; x ; eps
qed.

t /002. eps begins_with x | eps ends_with x -> x = eps
proof.
H : x
/290-> ; eps ; x : c
/288-> ; eps ; x : a
/204 ; x ; c
/204 ; a ; x
qed.

t /005. x1 + y1 = x2 + y2 & x1 <= x2 -> y2 <= y1
proof.
H : x1 : y1 : x2 : y2
/68 ; x1 ; x2
/72 ; x1 ; x2 -. x1 ; y2
/120 ; x1 ; y1 ; ( x2 -. x1 ) + y2
/98 ; x2 -. x1 ; y2
/71 ; y2 ; x2 -. x1
qed.

t /006. a1 (+) c1 = a2 (+) c2 & a1 pre<= a2 -> c2 pre<= c1
proof.
H : a1 : c1 : a2 : c2
/264-> ; a1 ; a2
/264<- ; c2 ; c1
/260 ; a1 ; c1
/260 ; a2 ; c2
/005 ; Length a1 ; Length c1 ; Length a2 ; Length c2
qed.

t /008. x pre<= eps -> x = eps
proof.
H : x
/264-> ; x ; eps
/57 ; Length x
/001 ; x
/259
qed.

t /007. a1 (+) c1 = a2 (+) c2 & a1 pre<= a2 & c2 != eps -> c1 != eps
proof.
H : a1 : c1 : a2 : c2
/006 ; a1 ; c1 ; a2 ; c2
/008 ; c2
qed.

t /003b. eps begins_with a1 & eps begins_with a2 & a1 pre<= a2 -> a2 begins_with a1
proof.
H : a1 : a2
/002 ; a1
/002 ; a2
/294 ; eps
qed.

t /003i. [ x begins_with a1 & x begins_with a2 & a1 pre<= a2 -> a2 begins_with a1 ] -> [ x (+) b0 begins_with a1 & x (+) b0 begins_with a2 & a1 pre<= a2 -> a2 begins_with a1 ]
proof.
H : x : a1 : a2
/290-> ; x (+) b0 ; a2 : c2
/196 ; a2
? c2 != eps
/254 ; a2 ; c2
/243 ; x
/291 ; a2 ; Chop c2
/290-> ; x (+) b0 ; a1 : c1
/196 ; a1
/007 ; a1 ; c1 ; a2 ; c2
/254 ; a1 ; c1
/291 ; a1 ; Chop c1
qed.

t /003j. [ x begins_with a1 & x begins_with a2 & a1 pre<= a2 -> a2 begins_with a1 ] -> [ x (+) b1 begins_with a1 & x (+) b1 begins_with a2 & a1 pre<= a2 -> a2 begins_with a1 ]
proof.
H : x : a1 : a2
/290-> ; x (+) b1 ; a2 : c2
/196 ; a2
? c2 != eps
/254 ; a2 ; c2
/244 ; x
/291 ; a2 ; Chop c2
/290-> ; x (+) b1 ; a1 : c1
/196 ; a1
/007 ; a1 ; c1 ; a2 ; c2
/254 ; a1 ; c1
/291 ; a1 ; Chop c1
qed.

t /003. x begins_with a1 & x begins_with a2 & a1 pre<= a2 -> a2 begins_with a1

t /010. x begins_with y & y begins_with x -> x = y
proof.
H : x : y
/290-> ; x ; y : c
/290-> ; y ; x : d
/183 ; x ; d ; c
/196 ; x
/199 ; x ; eps ; d (+) c
/204 ; d ;c
qed.

t /011. x ends_with y & y ends_with x -> x = y
proof.
H : x : y
/288-> ; x ; y : c
/288-> ; y ; x : d
/194 ; x
/183 ; c ; d ; x
/197 ; eps ; x ; c (+) d
/204 ; c ; d
qed.

d /012. last_bit ( x , b ) <-> [ x = Chop x (+) b0 & b = b0 ] | [ x = Chop x (+) b1 & b = b1 ] | [ x = eps & b = eps ]

t /013. last_bit ( x , b1 ) & last_bit ( x , b2 ) -> b1 = b2
proof.
H :x : b1 : b2
/012-> ; x ; b1
/012-> ; x ; b2
/253 ; x
? x != eps
qed.

)PRA_CORPUS";
}

}  // namespace pra

#endif  // PRA_CORPUS_DATA_HPP
