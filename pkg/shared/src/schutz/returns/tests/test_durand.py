"""
durand.py 的基本測試
測試連接搜尋、回返字計算與回返代換
"""

from itertools import product

import pytest
from schutz.errors import (
    ConnectionNotValidError,
    NotPrimitiveError,
    PeriodicWitnessError,
    ReturnWordError,
)
from schutz.fixtures.catalog import (
    ENDOMORPHISMS,
    XI_RETURN_FACTORIZATIONS,
    XI_THETA,
    substitution,
)
from schutz.returns import (
    Connection,
    connection_order,
    durand,
    factorize_over_returns,
    find_connection,
    find_connections,
    is_code,
    make_connection,
    split_return_words,
    verify_connection,
)
from schutz.substitutions import Substitution, apply, power
from schutz.words import MonoidWord, parse_monoid_word, render_monoid_word
from schutz.words.word_operations import occurrences


def m(text: str) -> MonoidWord:
    return parse_monoid_word(text)


def rendered_images(structure):
    return tuple(render_monoid_word(image) for image in structure.return_substitution.images)


@pytest.fixture
def xi_structure():
    """ξ 在連接 (1, 0) 上的回返結構"""
    xi = substitution("xi")
    return durand(xi, find_connection(xi))


def test_connection_rejects_empty_words():
    """測試連接的 u、v 必須非空"""
    with pytest.raises(ConnectionNotValidError, match="非空字"):
        Connection(MonoidWord(), m("0"), 1)


def test_connection_str():
    """測試連接的文字表示"""
    assert str(Connection(m("0"), m("10"), 2)) == "(0, 10)"


def test_find_connection_thue_morse():
    """測試 τ 的連接為 (0, 1)，階為 2"""
    connection = find_connection(substitution("thue_morse"))
    assert (connection.u, connection.v, connection.order) == (m("0"), m("1"), 2)


def test_find_connections_thue_morse_prefers_distinct_letters():
    """測試同階時相異字母優先"""
    connections = find_connections(substitution("thue_morse"))
    pairs = [(str(c.u), str(c.v)) for c in connections]
    assert pairs == [("0", "1"), ("1", "0"), ("0", "0"), ("1", "1")]
    assert all(c.order == 2 for c in connections)


def test_find_connections_xi():
    """測試 ξ 的最小階連接"""
    connections = find_connections(substitution("xi"))
    pairs = [(str(c.u), str(c.v)) for c in connections]
    assert pairs == [("1", "0"), ("1", "3"), ("2", "0"), ("2", "3")]
    assert all(c.order == 2 for c in connections)


@pytest.mark.parametrize(
    "name, expected",
    [("period_doubling", ("1", "0", 2)), ("fibonacci", ("1", "0", 2)), ("periodic", ("1", "0", 1))],
)
def test_find_connection_examples(name, expected):
    """測試其他範例的連接"""
    connection = find_connection(substitution(name))
    assert (str(connection.u), str(connection.v), connection.order) == expected


def test_find_connection_requires_primitive():
    """測試非原始代換"""
    with pytest.raises(NotPrimitiveError):
        find_connection(Substitution.from_texts(["0", "01"]))


def test_connection_order_and_verify():
    """測試 (0, 10) 是 τ 的二階連接"""
    tau = substitution("thue_morse")
    assert connection_order(tau, m("0"), m("10")) == 2
    assert verify_connection(tau, m("0"), m("10"), 2)
    assert not verify_connection(tau, m("0"), m("1"), 1)


def test_make_connection_rejects_invalid():
    """測試 (00, 0) 不是 τ 的連接"""
    with pytest.raises(ConnectionNotValidError, match="不是此代換的連接"):
        make_connection(substitution("thue_morse"), m("00"), m("0"))


def test_durand_thue_morse_0_1():
    """測試 τ'_{0,1}"""
    tau = substitution("thue_morse")
    structure = durand(tau, find_connection(tau))
    assert rendered_images(structure) == ENDOMORPHISMS["thue_morse_return_0_1"]


def test_durand_thue_morse_0_10():
    """測試 τ'_{0,10}"""
    tau = substitution("thue_morse")
    structure = durand(tau, make_connection(tau, m("0"), m("10")))
    assert rendered_images(structure) == ENDOMORPHISMS["thue_morse_return_0_10"]


def test_durand_period_doubling():
    """測試 ϱ'_{1,0} = (010, 01110)"""
    rho = substitution("period_doubling")
    structure = durand(rho, find_connection(rho))
    assert rendered_images(structure) == ENDOMORPHISMS["period_doubling_return_1_0"]


def test_durand_xi_theta(xi_structure):
    """測試 ξ 的回返字依最左出現順序編號"""
    assert tuple(render_monoid_word(word) for word in xi_structure.theta) == XI_THETA
    assert rendered_images(xi_structure) == ENDOMORPHISMS["xi_return_1_0"]


def test_durand_xi_factorization_rows(xi_structure):
    """測試 1·ξ²(Θ(j))·0 的回返字分解表"""
    for j, row in enumerate(XI_RETURN_FACTORIZATIONS):
        pieces = row.split(".")[1:-1]
        image = xi_structure.return_substitution.images[j]
        assert [render_monoid_word(xi_structure.theta[i]) for i in image.letters] == pieces


def test_defining_relation_on_short_words(xi_structure):
    """測試長度至多 3 的字詞滿足 Θ∘φ' = φᵏ∘Θ"""
    xi = substitution("xi")
    phi_k = power(xi, xi_structure.connection.order)
    letters = xi_structure.return_substitution.alphabet.letters
    for length in range(1, 4):
        for word in product(letters, repeat=length):
            word = MonoidWord(word)
            left = xi_structure.decode(apply(xi_structure.return_substitution, word))
            assert left == apply(phi_k, xi_structure.decode(word))


def test_return_words_are_complete_returns(xi_structure):
    """測試每個回返字 w 使 uv 在 u·w·v 中恰好出現於開頭與結尾"""
    u, v = xi_structure.connection.u, xi_structure.connection.v
    for word in xi_structure.theta:
        assert occurrences(u + word + v, u + v) == [0, len(word)]


def test_factorize_over_returns():
    """測試第 0 列的索引序列"""
    xi = substitution("xi")
    connection = find_connection(xi)
    assert factorize_over_returns(xi, connection, 0) == [0, 0, 1, 0, 2]
    with pytest.raises(ReturnWordError, match="超出範圍"):
        factorize_over_returns(xi, connection, 7)


def test_split_return_words_requires_boundaries():
    """測試字詞必須以 uv 開頭並結尾"""
    assert split_return_words(m("100110"), m("1"), m("0")) == [m("0011")]
    with pytest.raises(ReturnWordError):
        split_return_words(m("0010"), m("1"), m("0"))


def test_durand_periodic_signal():
    """測試週期代換只有單一回返字 021"""
    periodic = substitution("periodic")
    with pytest.raises(PeriodicWitnessError) as error:
        durand(periodic, find_connection(periodic))
    assert render_monoid_word(error.value.return_word) == "021"


def test_durand_rejects_wrong_order():
    """測試錯誤的階"""
    tau = substitution("thue_morse")
    with pytest.raises(ConnectionNotValidError):
        durand(tau, Connection(m("0"), m("1"), 1))


CATALOG_CONNECTIONS = [
    ("thue_morse", None),
    ("thue_morse", ("0", "10")),
    ("alpha", None),
    ("period_doubling", None),
    ("fibonacci", None),
    ("xi", None),
]


def catalog_structure(name, pair):
    s = substitution(name)
    if pair is None:
        return s, durand(s, find_connection(s))
    return s, durand(s, make_connection(s, m(pair[0]), m(pair[1])))


@pytest.mark.parametrize("name, pair", CATALOG_CONNECTIONS)
def test_defining_relation_on_catalog(name, pair):
    """測試各範例在長度至多 3 的字詞上滿足 Θ∘φ' = φᵏ∘Θ"""
    s, structure = catalog_structure(name, pair)
    phi_k = power(s, structure.connection.order)
    letters = structure.return_substitution.alphabet.letters
    for length in range(1, 4):
        for word in product(letters, repeat=length):
            word = MonoidWord(word)
            left = structure.decode(apply(structure.return_substitution, word))
            assert left == apply(phi_k, structure.decode(word))


@pytest.mark.parametrize("name, pair", CATALOG_CONNECTIONS)
def test_return_words_form_a_code_on_catalog(name, pair):
    """測試各範例的回返字集合為碼且兩兩相異"""
    _, structure = catalog_structure(name, pair)
    assert len(set(structure.theta)) == structure.size
    assert is_code(structure.theta)


@pytest.mark.parametrize("name, pair", CATALOG_CONNECTIONS)
def test_theta_numbered_by_first_occurrence(name, pair):
    """測試回返字依在 φ'(0)φ'(1)… 中首次出現的順序編號"""
    _, structure = catalog_structure(name, pair)
    sequence = [0]
    for image in structure.return_substitution.images:
        sequence.extend(image.letters)
    first_seen = list(dict.fromkeys(sequence))
    assert first_seen == list(range(structure.size))


@pytest.mark.parametrize("name, pair", CATALOG_CONNECTIONS)
def test_theta_zero_is_leftmost_return(name, pair):
    """測試 Θ(0) 是 u·φᵏ(v) 中最左的完整回返字"""
    s, structure = catalog_structure(name, pair)
    u, v = structure.connection.u, structure.connection.v
    text = u + apply(power(s, structure.connection.order), v)
    while len(occurrences(text, u + v)) < 2:
        text = u + apply(power(s, structure.connection.order), text[len(u) :])
    start, stop = occurrences(text, u + v)[:2]
    assert structure.theta[0] == text[start + len(u) : stop + len(u)]
