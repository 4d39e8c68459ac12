#include <sstream>

#include "commkit/benchgen.hpp"
#include "commkit/errors.hpp"

namespace commkit {

namespace {

// Zachary's karate club, 34 vertices / 78 edges, 0-indexed.
const char* const kKarateEdges = R"(# vertices: 34
0 1
0 2
0 3
0 4
0 5
0 6
0 7
0 8
0 10
0 11
0 12
0 13
0 17
0 19
0 21
0 31
1 2
1 3
1 7
1 13
1 17
1 19
1 21
1 30
2 3
2 7
2 8
2 9
2 13
2 27
2 28
2 32
3 7
3 12
3 13
4 6
4 10
5 6
5 10
5 16
6 16
8 30
8 32
8 33
9 33
13 33
14 32
14 33
15 32
15 33
18 32
18 33
19 33
20 32
20 33
22 32
22 33
23 25
23 27
23 29
23 32
23 33
24 25
24 27
24 31
25 31
26 29
26 33
27 33
28 31
28 33
29 32
29 33
30 32
30 33
31 32
31 33
32 33
)";

// Faction split observed by Zachary (instructor vs. administrator).
const int kKarateTruth[34] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0,
                              0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

// Lusseau's bottlenose dolphin social network, 62 vertices / 159 edges,
// 0-indexed.
const char* const kDolphinEdges = R"(# vertices: 62
0 10
0 14
0 15
0 40
0 42
0 47
1 17
1 19
1 26
1 27
1 28
1 36
1 41
1 54
2 10
2 42
2 44
2 61
3 8
3 14
3 59
4 51
5 9
5 13
5 56
5 57
6 9
6 13
6 17
6 54
6 56
6 57
7 19
7 27
7 30
7 40
7 54
8 20
8 28
8 37
8 45
8 59
9 13
9 17
9 32
9 41
9 57
10 29
10 42
10 47
11 51
12 33
13 17
13 32
13 41
13 54
13 57
14 16
14 24
14 33
14 34
14 37
14 38
14 40
14 43
14 50
14 52
15 18
15 24
15 40
15 45
15 55
15 59
16 20
16 33
16 37
16 38
16 50
17 22
17 25
17 27
17 31
17 57
18 20
18 21
18 24
18 29
18 45
18 51
19 30
19 54
20 28
20 36
20 38
20 44
20 47
21 29
21 33
21 37
21 45
21 51
22 36
22 45
22 51
23 29
23 45
23 51
24 29
25 26
25 27
26 27
28 36
28 43
29 44
29 45
29 47
30 42
30 47
32 60
33 34
33 38
33 40
33 43
33 50
34 37
34 43
34 44
34 49
35 36
36 37
37 39
37 40
37 43
37 45
37 61
38 43
38 44
38 52
38 58
39 57
40 52
41 54
41 57
42 47
42 50
43 46
43 53
45 50
45 51
46 59
48 57
50 51
51 55
53 56
53 57
54 56
54 57
55 57
57 60
)";

}  // namespace

Graph load_builtin(const std::string& name) {
    const char* text;
    if (name == "karate")
        text = kKarateEdges;
    else if (name == "dolphins")
        text = kDolphinEdges;
    else
        throw ArgumentError("unknown builtin dataset '" + name + "'");
    std::istringstream in(text);
    return load_edge_list(in);
}

std::optional<Partition> builtin_ground_truth(const std::string& name) {
    if (name == "karate")
        return canonicalize(std::vector<int>(kKarateTruth, kKarateTruth + 34));
    if (name == "dolphins") return std::nullopt;
    throw ArgumentError("unknown builtin dataset '" + name + "'");
}

}  // namespace commkit
