import hypothesis.strategies as st

partitions_st = st.lists(
    st.integers(min_value=1, max_value=10), min_size=0, max_size=8,
).map(lambda xs: tuple(sorted(xs, reverse=True)))

distinct_partitions_st = st.sets(
    st.integers(min_value=1, max_value=18), min_size=0, max_size=6,
).map(lambda s: tuple(sorted(s, reverse=True)))

ar_words_st = st.lists(st.sampled_from("AR"), max_size=24).map("".join)
