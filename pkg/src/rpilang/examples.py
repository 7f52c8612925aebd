"""Bundled example programs, embedded as source text.

``registry()`` maps a file-like name to (description, source).  The
command line falls back to these names when a path does not exist on
disk, so ``rpi run query.rpi`` works from any directory.
"""

from __future__ import annotations

QUERY_RPI = """\
-- A relation applied to a two-alternative input.  The classical image
-- of {F, T} under r would be {F, T}; exclusive union cancels the two
-- ways of reaching F, leaving {T}.
def r = s2r { (F,F), (F,T), (T,F) };
main = r on { F, T };
"""

QUERY_DLOG = """\
% The same query as query.rpi, as a logic program.  In prolog mode the
% answer stream is false, true, false; filtering answers of even
% multiplicity (union mode xor) leaves only true.
r(false,false).
r(false,true).
r(true,false).

q(X) :- r(false,X).
q(X) :- r(true,X).
"""

SUPERDENSE_RPI = """\
-- Dense coding: two classical bits ride on one half of a shared
-- entangled pair.  Pick the encoder with `rpi run superdense.rpi
-- --alice N`; measurement then reports outcome N deterministically.
def shared = { (F,F), (T,T) };

comb negb = bool2sum ; swap_plus ; sum2bool;

def alice0 = arr (id : bool <-> bool);
def alice1 = arr negb;
def alice2 = s2r { (F,F), (T,F), (T,T) };
def alice3 = arr negb >>> s2r { (F,F), (T,F), (T,T) };
def alice = alice0;

def d0 = { (F,T), (T,F), (T,T) };
def d1 = { (F,F), (T,F), (T,T) };
def d2 = { (F,T), (T,F) };
def d3 = { (F,F), (T,T) };

main = first alice on shared measure [d0, d1, d2, d3];
"""

SUPERDENSE_DLOG = """\
% Dense coding as a logic program.  r is the shared pair; id, g, k and
% gk are the four encoders; rd, sd, ud, vd are the duals Bob measures
% against.  Query sdcoding(N,X) and filter with union mode xor to
% recover X = N.
r(false,false).
r(true,true).

s(false,true).
s(true,false).

u(false,false).
u(false,true).
u(true,true).

v(false,false).
v(false,true).
v(true,false).

rd(false,true).
rd(true,false).
rd(true,true).

sd(false,false).
sd(true,false).
sd(true,true).

ud(false,true).
ud(true,false).

vd(false,false).
vd(true,true).

eq(false,false).
eq(true,true).

id(false,false).
id(true,true).

g(false,true).
g(true,false).

k(false,false).
k(true,false).
k(true,true).

gk(X,Y) :- g(X,Z),k(Z,Y).

alice(0,X,Y):- id(X,Y).
alice(1,X,Y):- g(X,Y).
alice(2,X,Y):- k(X,Y).
alice(3,X,Y):- gk(X,Y).

sdcoding(N,M) :- r(X,Y),alice(N,X,B),measure((B,Y),M).

measure((S1,S2),0) :- rd(B1,B2),dotP((B1,B2),(S1,S2)).
measure((S1,S2),1) :- sd(B1,B2),dotP((B1,B2),(S1,S2)).
measure((S1,S2),2) :- ud(B1,B2),dotP((B1,B2),(S1,S2)).
measure((S1,S2),3) :- vd(B1,B2),dotP((B1,B2),(S1,S2)).

dotP((B1,B2),(S1,S2)) :- eq(B1,S1),eq(B2,S2).
"""

MATRICES_RPI = """\
-- Small denotation showcase for the `matrix` subcommand.
def epsilon = eps @ bool;
def unit_pairs = eta @ bool;
def push = strength @ bool * bool;
def rel1 = s2r { (F,F), (T,F), (T,T) };
def rel2 = s2r { (F,F), (F,T), (T,F) };
def composed = rel1 >>> rel2;
"""

_REGISTRY = {
    "query.rpi": ("the two-alternative query with interference", QUERY_RPI),
    "query.dlog": ("the same query as a logic program", QUERY_DLOG),
    "superdense.rpi": ("dense coding over a shared pair", SUPERDENSE_RPI),
    "superdense.dlog": ("dense coding as a logic program", SUPERDENSE_DLOG),
    "matrices.rpi": ("denotation showcase for `matrix`", MATRICES_RPI),
}


def registry() -> dict[str, tuple[str, str]]:
    return dict(_REGISTRY)


def get(name: str) -> str:
    """Source text of a bundled example, by its file-like name."""
    return _REGISTRY[name][1]
