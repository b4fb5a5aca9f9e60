// Published table data, transcribed verbatim.

const SIX_EVEN_ROWS: &[PublishedRow] = &[
    PublishedRow { patterns: "(634521 652341) (534621 651342)", counts: &[Some(1), Some(5), Some(61), Some(1385), Some(47860), Some(2202236)] },
    PublishedRow { patterns: "(564321 654312) 645321 653421 (456321 654123) (345621 651234) (234561 612345) (165432 543216) (216543 432165) (126543 432156) 321654 (213654 321465) 123456 (123654 321456) (213465 213465) (123465 213456)", counts: &[Some(1), Some(5), Some(61), Some(1385), Some(47860), Some(2201540)] },
    PublishedRow { patterns: "(312654 321564) (213564 312465) (123564 312456)", counts: &[Some(1), Some(5), Some(61), Some(1385), Some(47860), Some(2198859)] },
    PublishedRow { patterns: "(215643 431265) (125643 431256)", counts: &[Some(1), Some(5), Some(61), Some(1385), Some(47860), Some(2197690)] },
    PublishedRow { patterns: "(214563 412365) (124563 412356)", counts: &[Some(1), Some(5), Some(61), Some(1385), Some(47860), Some(2197299)] },
    PublishedRow { patterns: "(214653 421365) (124653 421356)", counts: &[Some(1), Some(5), Some(61), Some(1385), Some(47860), Some(2195798)] },
    PublishedRow { patterns: "(143265 215436) (125436 143256)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44386), Some(1954114)] },
    PublishedRow { patterns: "(132654 321546) (124365 214356) (132465 213546) (123546 132456) (124356 124356) 214365", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44377), Some(1951843)] },
    PublishedRow { patterns: "(564231 645312) (456231 645123)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44377), Some(1951757)] },
    PublishedRow { patterns: "(564312 564312) (456312 564123) (345612 561234) 456123", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44377), Some(1951429)] },
    PublishedRow { patterns: "(465312 564213) (456213 465123)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44342), Some(1943735)] },
    PublishedRow { patterns: "(215634 341265) (125634 341256)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44333), Some(1940841)] },
    PublishedRow { patterns: "(216534 342165) (126534 342156)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44333), Some(1940623)] },
    PublishedRow { patterns: "(546312 564132) (456132 546123)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44324), Some(1940209)] },
    PublishedRow { patterns: "(231654 321645) (213645 231465) (123645 231456)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44306), Some(1937196)] },
    PublishedRow { patterns: "(216453 423165) (126453 423156)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44306), Some(1936673)] },
    PublishedRow { patterns: "(216345 234165) (126345 234156)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44306), Some(1935009)] },
    PublishedRow { patterns: "(142365 214536) (124536 142356)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44289), Some(1935152)] },
    PublishedRow { patterns: "(134265 215346) (125346 134256)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44289), Some(1934933)] },
    PublishedRow { patterns: "(214635 241365) (124635 241356)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44280), Some(1932468)] },
    PublishedRow { patterns: "(216435 243165) (126435 243156)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44280), Some(1931424)] },
    PublishedRow { patterns: "(215364 314265) (125364 314256)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44271), Some(1930657)] },
    PublishedRow { patterns: "(215463 413265) (125463 413256)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44271), Some(1929874)] },
    PublishedRow { patterns: "(216354 324165) (126354 324156)", counts: &[Some(1), Some(5), Some(61), Some(1344), Some(44253), Some(1926893)] },
];

const SIX_ODD_ROWS: &[PublishedRow] = &[
    PublishedRow { patterns: "(654321 123456) (654312 213456) (654123 321456) (651234 432156) (612345 543216)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7936), Some(329098), Some(17316208)] },
    PublishedRow { patterns: "(634521 125436) (634512 215436)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(300499), Some(15125692)] },
    PublishedRow { patterns: "(653421 124356) (653412 214356)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(300430), Some(15106854)] },
    PublishedRow { patterns: "(645321 123546) (645312 213546) (645123 321546)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(300430), Some(15106113)] },
    PublishedRow { patterns: "(564321 123465) (456321 123654) (345621 126543) (234561 165432) (564312 213465) (456312 213654) (345612 216543) (564123 321465) (456123 321654) (561234 432165)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(300430), Some(15102362)] },
    PublishedRow { patterns: "(564213 312465) (456213 312654)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(300172), Some(15038858)] },
    PublishedRow { patterns: "(435621 126534) (435612 216534)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(300103), Some(15012608)] },
    PublishedRow { patterns: "(465321 123564) (465312 213564) (465123 321564)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(300094), Some(15023874)] },
    PublishedRow { patterns: "(346521 125643) (346512 215643)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(300025), Some(15004212)] },
    PublishedRow { patterns: "(436521 125634) (436512 215634)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(300025), Some(14998611)] },
    PublishedRow { patterns: "(546321 123645) (546312 213645) (546123 321645)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(299916), Some(14987084)] },
    PublishedRow { patterns: "(365421 124563) (365412 214563)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(299897), None] },
    PublishedRow { patterns: "(543621 126345) (543612 216345)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(299768), None] },
    PublishedRow { patterns: "(635421 124536) (635412 214536)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(299708), None] },
    PublishedRow { patterns: "(356421 124653) (356412 214653)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(299698), None] },
    PublishedRow { patterns: "(643521 125346) (643512 215346)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(299668), None] },
    PublishedRow { patterns: "(534621 126435) (534612 216435)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(299658), None] },
    PublishedRow { patterns: "(536421 124635) (536412 214635)", counts: &[Some(1), Some(2), Some(16), Some(272), Some(7622), Some(299639), None] },
    PublishedRow { patterns: "(563421 124365) (563412 214365)", counts: &[Some(1), Some(2), Some(16), Some(266), Some(7164), Some(270463), Some(13077672)] },
    PublishedRow { patterns: "(564231 132465) (456231 132654)", counts: &[Some(1), Some(2), Some(16), Some(266), Some(7164), Some(270463), Some(13077275)] },
    PublishedRow { patterns: "(564132 231465) (456132 231654)", counts: &[Some(1), Some(2), Some(16), Some(266), Some(7156), Some(268940), Some(12868164)] },
    PublishedRow { patterns: "(354621 126453) (354612 216453)", counts: &[Some(1), Some(2), Some(16), Some(266), Some(7156), Some(268876), None] },
    PublishedRow { patterns: "(463521 125364) (463512 215364)", counts: &[Some(1), Some(2), Some(16), Some(266), Some(7148), Some(267642), None] },
    PublishedRow { patterns: "(453621 126354) (453612 216354)", counts: &[Some(1), Some(2), Some(16), Some(266), Some(7148), Some(267590), None] },
    PublishedRow { patterns: "(364521 125463) (364512 215463)", counts: &[Some(1), Some(2), Some(16), Some(266), Some(7148), Some(267539), None] },
];

const FOUR_REP_ROWS: &[PublishedRow] = &[
    PublishedRow { patterns: "1342", counts: &[Some(1), Some(1), Some(1), Some(2), Some(5), Some(9), Some(20), Some(64), Some(143)] },
    PublishedRow { patterns: "1243", counts: &[Some(1), Some(1), Some(1), Some(2), Some(5), Some(9), Some(21), Some(68), Some(153)] },
    PublishedRow { patterns: "1423", counts: &[Some(1), Some(1), Some(1), Some(3), Some(6), Some(9), Some(42), Some(93), Some(143)] },
    PublishedRow { patterns: "3124", counts: &[Some(1), Some(1), Some(1), Some(3), Some(9), Some(9), Some(44), Some(143), Some(143)] },
    PublishedRow { patterns: "2134 4123", counts: &[Some(1), Some(1), Some(1), Some(3), Some(9), Some(9), Some(44), Some(153), Some(153)] },
];
