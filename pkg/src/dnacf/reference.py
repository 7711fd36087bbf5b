"""Published reference values reproduced by this package.
Bound-table cells, improved entries, codeword listings, block-pair tables,
and the encoded Hamming-code listing, kept verbatim as regression fixtures
so every reproduction diffs against a pinned target."""

# best known sizes of complete-conflict-free codes with reverse,
# reverse-complement, and GC constraints; key (n, ell) -> row by d = 1..n
BOUND_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (8, 4),
    (3, 1): (16, 6, 2),
    (4, 1): (56, 32, 12, 4),
    (4, 2): (48, 32, 12, 4),
    (5, 1): (128, 52, 14, 4, 2),
    (5, 2): (108, 48, 14, 4, 2),
    (6, 1): (424, 100, 32, 20, 0, 4),
    (6, 2): (320, 88, 32, 20, 0, 4),
    (6, 3): (320, 88, 32, 20, 0, 4),
    (7, 1): (1040, 146, 50, 28, 10, 4, 2),
    (7, 2): (740, 142, 50, 28, 10, 4, 2),
    (7, 3): (704, 136, 48, 28, 10, 4, 2),
    (8, 1): (3352, 252, 92, 48, 20, 12, 0, 4),
    (8, 2): (2192, 248, 88, 48, 20, 12, 0, 4),
    (8, 3): (2064, 238, 86, 48, 20, 12, 0, 4),
    (8, 4): (2024, 236, 76, 48, 20, 12, 0, 4),
    (9, 1): (8576, 386, 120, 64, 28, 16, 6, 4, 2),
    (9, 2): (5144, 346, 116, 60, 24, 16, 6, 4, 2),
    (9, 3): (4660, 344, 116, 60, 24, 16, 6, 4, 2),
    (9, 4): (4568, 336, 112, 60, 24, 16, 6, 4, 2),
    (10, 1): (27208, 660, 208, 104, 48, 28, 16, 8, 0, 4),
    (10, 2): (15104, 596, 196, 100, 48, 28, 16, 8, 0, 4),
    (10, 3): (13424, 568, 192, 92, 48, 28, 16, 8, 0, 4),
    (10, 4): (13008, 564, 184, 92, 48, 28, 16, 8, 0, 4),
    (10, 5): (13008, 564, 184, 92, 48, 28, 16, 8, 0, 4),
}

# entries that improved on earlier published tables, key (n, d)
IMPROVED_ENTRIES: dict[tuple[int, int], int] = {
    (4, 3): 12,
    (6, 4): 20,
    (8, 6): 12,
    (9, 6): 16,
    (9, 9): 2,
    (10, 7): 16,
    (10, 8): 8,
}

# published codeword listings, key (n, M, d)
CODEWORD_TABLES: dict[tuple[int, int, int], tuple[str, ...]] = {
    (4, 12, 3): (
        "ACTG", "AGCT", "ATGC", "CAGT", "CGTA", "CTAG",
        "GATC", "GCAT", "GTCA", "TACG", "TCGA", "TGAC",
    ),
    (6, 20, 4): (
        "ACAGTG", "ACGTGA", "AGCTAG", "AGTGCA", "ATCAGC", "CACTGT",
        "CATGTC", "CGACTA", "CTAGCT", "CTGTAC", "GACATG", "GATCGA",
        "GCTGAT", "GTACAG", "GTGACA", "TAGTCG", "TCACGT", "TCGATC",
        "TGCACT", "TGTCAC",
    ),
    (8, 12, 6): (
        "ACAGATCG", "AGCTACTC", "CATACGTC", "CGATCTGT", "CTCATCGA", "CTGCATAC",
        "GACGTATG", "GAGTAGCT", "GCTAGACA", "GTATGCAG", "TCGATGAG", "TGTCTAGC",
    ),
    (9, 16, 6): (
        "ACAGTAGCT", "AGCTACTGT", "AGTAGCATC", "ATACAGACG", "ATGATCGAG", "CGTCTGTAT",
        "CTACGATGA", "CTCGATCAT", "GAGCTAGTA", "GATGCTACT", "GCAGACATA", "TACTAGCTC",
        "TATGTCTGC", "TCATCGTAG", "TCGATGACA", "TGTCATCGA",
    ),
    (9, 2, 9): (
        "ACGATAGCA", "TGCTATCGT",
    ),
    (10, 16, 7): (
        "ACGTAGCAGA", "ACTACAGACG", "AGACGATGCA", "AGCGACTATC", "ATAGCTCGTG", "CACGAGCTAT",
        "CGTCTGTAGT", "CTATCAGCGA", "GATAGTCGCT", "GCAGACATCA", "GTGCTCGATA", "TATCGAGCAC",
        "TCGCTGATAG", "TCTGCTACGT", "TGATGTCTGC", "TGCATCGTCT",
    ),
    (10, 8, 8): (
        "ACATGCGATC", "CAGATACAGC", "CGACATAGAC", "GATCGCATGT", "GCTGTATCTG", "GTCTATGTCG",
        "CTAGCGTACA", "TGTACGCTAG",
    ),
}

# published block-pair tables, key ell -> ordered (x, y) pairs as printed
PAIR_TABLES: dict[int, tuple[tuple[str, str], ...]] = {
    3: (
        ("ATA", "CGC"), ("ATA", "GCG"), ("CGC", "ATA"), ("CGC", "TAT"),
        ("GCG", "ATA"), ("GCG", "TAT"), ("TAT", "CGC"), ("TAT", "GCG"),
    ),
    4: (
        ("ATCA", "CGAC"), ("GTCA", "CGAT"), ("ATGA", "GCAG"), ("CTGA", "GCAT"),
        ("ACTA", "CAGC"), ("GCTA", "CAGT"), ("AGTA", "GACG"), ("CGTA", "GACT"),
        ("CGAC", "ATCA"), ("TGAC", "ATCG"), ("CAGC", "ACTA"), ("TAGC", "ACTG"),
        ("ATGC", "TCAG"), ("CTGC", "TCAT"), ("AGTC", "TACG"), ("CGTC", "TACT"),
        ("GCAG", "ATGA"), ("TCAG", "ATGC"), ("GACG", "AGTA"), ("TACG", "AGTC"),
        ("ATCG", "TGAC"), ("GTCG", "TGAT"), ("ACTG", "TAGC"), ("GCTG", "TAGT"),
        ("GCAT", "CTGA"), ("TCAT", "CTGC"), ("CGAT", "GTCA"), ("TGAT", "GTCG"),
        ("GACT", "CGTA"), ("TACT", "CGTC"), ("CAGT", "GCTA"), ("TAGT", "GCTG"),
    ),
    5: (
        ("ACGCA", "CTATC"), ("ACGCA", "GATAG"), ("CTGCA", "GACAT"), ("GATCA", "CGAGT"),
        ("GCTCA", "CTGAT"), ("GCTCA", "CTAGT"), ("AGCGA", "CATAC"), ("AGCGA", "GTATG"),
        ("GTCGA", "CAGAT"), ("CATGA", "GCACT"), ("CGTGA", "GTCAT"), ("CGTGA", "GTACT"),
        ("ATCTA", "GCGAC"), ("ATCTA", "CGAGC"), ("ATCTA", "CGTGC"), ("ATCTA", "GCACG"),
        ("ATCTA", "CAGCG"), ("ATCTA", "GCTCG"), ("GTCTA", "CGACT"), ("GTCTA", "CAGCT"),
        ("ATGTA", "CGAGC"), ("ATGTA", "GACGC"), ("ATGTA", "CGTGC"), ("ATGTA", "CGCAG"),
        ("ATGTA", "GCACG"), ("ATGTA", "GCTCG"), ("CTGTA", "GCAGT"), ("CTGTA", "GACGT"),
        ("TAGAC", "AGTCG"), ("TAGAC", "AGCTG"), ("TCGAC", "ATCTG"), ("CATAC", "AGCGA"),
        ("CATAC", "TCGCT"), ("AGTAC", "TCACG"), ("CGAGC", "TATCA"), ("CGAGC", "ATCTA"),
        ("CGAGC", "ATGTA"), ("CGAGC", "TACAT"), ("CGAGC", "TAGAT"), ("CGAGC", "ACTAT"),
        ("TGAGC", "ATCAG"), ("TGAGC", "ACTAG"), ("AGTGC", "TCATG"), ("AGTGC", "TACTG"),
        ("CGTGC", "TCATA"), ("CGTGC", "ATCTA"), ("CGTGC", "ATGTA"), ("CGTGC", "TACAT"),
        ("CGTGC", "TAGAT"), ("CGTGC", "ATACT"), ("TGATC", "ACTCG"), ("CTATC", "ACGCA"),
        ("CTATC", "TGCGT"), ("ACGTC", "TACAG"), ("ATGTC", "TGCAG"), ("ATGTC", "TGACG"),
        ("TACAG", "ACTGC"), ("TACAG", "ACGTC"), ("TGCAG", "ATGTC"), ("GATAG", "ACGCA"),
        ("GATAG", "TGCGT"), ("ACTAG", "TGAGC"), ("GCACG", "TATGA"), ("GCACG", "ATCTA"),
        ("GCACG", "ATGTA"), ("GCACG", "TACAT"), ("GCACG", "TAGAT"), ("GCACG", "AGTAT"),
        ("TCACG", "ATGAC"), ("TCACG", "AGTAC"), ("ACTCG", "TGATC"), ("ACTCG", "TAGTC"),
        ("GCTCG", "TGATA"), ("GCTCG", "ATCTA"), ("GCTCG", "ATGTA"), ("GCTCG", "TACAT"),
        ("GCTCG", "TAGAT"), ("GCTCG", "ATAGT"), ("TCATG", "AGTGC"), ("GTATG", "AGCGA"),
        ("GTATG", "TCGCT"), ("AGCTG", "TAGAC"), ("ATCTG", "TCGAC"), ("ATCTG", "TCAGC"),
        ("GACAT", "CTGCA"), ("GACAT", "CGTCA"), ("TACAT", "CGAGC"), ("TACAT", "CGTGC"),
        ("TACAT", "GCGTC"), ("TACAT", "GCACG"), ("TACAT", "CTGCG"), ("TACAT", "GCTCG"),
        ("CAGAT", "GTCGA"), ("CAGAT", "GCTGA"), ("TAGAT", "CGAGC"), ("TAGAT", "GTCGC"),
        ("TAGAT", "CGTGC"), ("TAGAT", "GCACG"), ("TAGAT", "GCTCG"), ("TAGAT", "CGCTG"),
        ("GCACT", "CATGA"), ("GCACT", "CAGTA"), ("GTACT", "CGTGA"), ("CAGCT", "GTCTA"),
        ("TCGCT", "CATAC"), ("TCGCT", "GTATG"), ("CGAGT", "GATCA"), ("CGAGT", "GACTA"),
        ("CTAGT", "GCTCA"), ("GACGT", "CTGTA"), ("TGCGT", "CTATC"), ("TGCGT", "GATAG"),
    ),
}

# the published encoded listing for the [7,4,3] code with blocks ATA/CGC;
# its transitions do not follow the published mapping table (see tests)
HAMMING_DNA_TABLE: tuple[tuple[str, str], ...] = (
    ("0000000", "ATACGCATACGCATACGCATA"),
    ("1110000", "TATCGCTATGCGTATGCGTAT"),
    ("1001100", "TATGCGTATCGCTATGCGTAT"),
    ("0111100", "ATAGCGATAGCGATACGCATA"),
    ("0101010", "ATAGCGTATCGCATAGCGTAT"),
    ("1011010", "TATGCGATAGCGTATCGCATA"),
    ("1100110", "TATCGCATACGCTATCGCATA"),
    ("0010110", "ATACGCTATGCGATAGCGTAT"),
    ("1101001", "TATCGCATAGCGTATGCGATA"),
    ("0011001", "ATACGCTATCGCATACGCTAT"),
    ("0100101", "ATAGCGTATGCGATACGCTAT"),
    ("1010101", "TATGCGATACGCTATGCGATA"),
    ("1000011", "TATGCGTATGCGTATCGCTAT"),
    ("0110011", "ATAGCGATACGCATAGCGATA"),
    ("0001111", "ATACGCATAGCGATAGCGATA"),
    ("1111111", "TATCGCTATCGCTATCGCTAT"),
)

# published parameter rows for encoded codes: name, (n, M, d) as printed,
# DNA length multiplier, size, distance multiplier (in units of ell);
# None marks rows this package does not construct
PARAMS_TABLE: tuple[dict, ...] = (
    {"name": "repetition5", "printed": "[5,2,5]", "length_mult": 5, "size": 2, "distance_mult": 3},
    {"name": "hamming74", "printed": "[7,4,3]", "length_mult": 7, "size": 16, "distance_mult": 2},
    {"name": "rm(1,3)", "printed": "[8,4,2]", "length_mult": 8, "size": 256, "distance_mult": 1,
     "note": "printed row is internally inconsistent; measured: size 16, distance 2*ell"},
    {"name": "nordstrom-robinson", "printed": "(15,256,5)", "length_mult": 15, "size": 256,
     "distance_mult": 3, "note": "not constructed here"},
    {"name": "golay23", "printed": "[23,12,7]", "length_mult": 23, "size": 4096, "distance_mult": 4},
)
