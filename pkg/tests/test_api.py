import json
import math

import pytest
from rest_framework import status
from rest_framework.test import APIClient

from api.serializers import AlgElementSerializer


@pytest.fixture
def client():
    return APIClient()


def test_spectrum_endpoint(client):
    response = client.get(
        '/api/reports/spectrum/', {'dirac': 'd2', 'cutoff': 2}
    )

    assert response.status_code == status.HTTP_200_OK
    assert [row['multiplicity'] for row in response.data['rows']] == [1, 4, 9]


def test_commutators_endpoint(client):
    response = client.get('/api/reports/commutators/', {'dirac': 'd3'})

    assert response.status_code == status.HTTP_200_OK
    assert response.data['dirac'] == 'd3'
    assert len(response.data['commutators']) == 8


def test_cs_action_endpoint(client, connection_payload):
    response = client.post(
        '/api/reports/cs-action/?dirac=d1', connection_payload, format='json'
    )

    assert response.status_code == status.HTTP_200_OK
    assert response.data['value_number'][0] == pytest.approx(-2.0)
    assert response.data['delta'] < 1e-9


def test_cs_action_rejects_invalid_document(client):
    response = client.post(
        '/api/reports/cs-action/', {'theta': 0.5}, format='json'
    )

    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert 'pairs' in response.data


def test_partition_endpoint(client):
    response = client.get(
        '/api/reports/partition/', {'theta': 0.5, 'level': 4, 'cutoff': 1}
    )

    assert response.status_code == status.HTTP_200_OK
    value = complex(*response.data['value'])
    assert abs(value) == pytest.approx(math.pi / 2)


def test_partition_resonance_is_unprocessable(client):
    response = client.get(
        '/api/reports/partition/', {'theta': 0.5, 'cutoff': 4}
    )

    assert response.status_code == 422
    assert 'detail' in response.data


def test_invalid_query_is_bad_request(client):
    response = client.get('/api/reports/spectrum/', {'tolerance': 0.1})

    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert 'tolerance' in response.data


def test_partition_cutoff_zero_is_bad_request(client):
    response = client.get('/api/reports/partition/', {'cutoff': 0})

    assert response.status_code == status.HTTP_400_BAD_REQUEST


def test_element_json_round_trip(ctx, random_element):
    for _ in range(10):
        element = random_element(ctx)
        document = json.loads(
            json.dumps(AlgElementSerializer(element).data)
        )

        serializer = AlgElementSerializer(
            data=document, context={'ctx': ctx}
        )
        assert serializer.is_valid(), serializer.errors
        restored = serializer.to_element()

        assert restored.ctx.theta == ctx.theta
        assert set(restored.modes) == set(element.modes)
        for key, coeff in element.modes.items():
            assert restored.modes[key].terms == coeff.terms
